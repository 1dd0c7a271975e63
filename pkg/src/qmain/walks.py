"""Combinatorial main-eigenvalue classification from degrees and 2-walk counts.

A non-regular graph has exactly two main signless Laplacian eigenvalues iff
there are integers a >= 1, b >= 0 with a^2 - 8b > 0 and

    s(v) = -d(v)^2 + a d(v) - b     for every vertex v,

in which case the two main eigenvalues are the roots of x^2 - a x + 2b.
The adjacency analogue ``s(v) = a d(v) + b`` is kept for comparison.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import ConsistencyViolation, NotConnected
from .graph import Graph, is_connected, is_regular, is_unicyclic, s_values
from .spectra import Spectrum, theorem5_residual

REGULAR = "Regular"
NON_INTEGER_AB = "NonIntegerAB"
DISCRIMINANT_FAIL = "DiscriminantFail"
RESIDUAL_FAIL = "ResidualFail"


@dataclass(frozen=True)
class ParabolicCertificate:
    a: int
    b: int
    max_residual: int = 0

    def __post_init__(self) -> None:
        if self.a < 1 or self.b < 0 or self.a * self.a - 8 * self.b <= 0 or self.max_residual != 0:
            raise ValueError(f"invalid parabolic certificate {self}")


@dataclass(frozen=True)
class LinearCertificate:
    a: int
    b: int


@dataclass(frozen=True)
class ClassifyFailure:
    """Why a graph has no certificate.

    ``candidate`` is the (a, b) pair that was fitted before the failure,
    ``vertex``/``residual`` locate the first violated vertex for
    ``ResidualFail``.
    """

    reason: str
    candidate: tuple[Fraction, Fraction] | None = None
    vertex: int | None = None
    residual: int | None = None

    def describe(self) -> str:
        if self.reason == RESIDUAL_FAIL:
            a, b = self.candidate
            return f"{self.reason} at vertex {self.vertex} (residual {self.residual}, candidate a={a}, b={b})"
        if self.candidate is not None:
            a, b = self.candidate
            return f"{self.reason} (candidate a={a}, b={b})"
        return self.reason


def _check_input(g: Graph) -> None:
    if not is_connected(g):
        raise NotConnected("certificates are defined for connected graphs")


def _distinct_degree_pair(g: Graph) -> tuple[int, int]:
    d = g.degrees
    v = next(i for i in range(g.n) if d[i] != d[0])
    return 0, v


def solve_parabolic(du: int, su: int, dv: int, sv: int) -> tuple[Fraction, Fraction]:
    """The unique (a, b) fitting the parabola through two vertices of different degree."""
    slope = Fraction(su - sv, du - dv)
    a = slope + du + dv
    b = slope * dv + du * dv - sv
    return a, b


def parabolic_residual(d: int, s: int, a, b):
    return s + d * d - a * d + b


def parabolic_certificate(g: Graph) -> ParabolicCertificate | ClassifyFailure:
    _check_input(g)
    if is_regular(g):
        return ClassifyFailure(REGULAR)
    d, s = g.degrees, s_values(g)
    u, v = _distinct_degree_pair(g)
    a, b = solve_parabolic(d[u], s[u], d[v], s[v])
    if a.denominator != 1 or b.denominator != 1 or a < 1 or b < 0:
        return ClassifyFailure(NON_INTEGER_AB, (a, b))
    if a * a - 8 * b <= 0:
        return ClassifyFailure(DISCRIMINANT_FAIL, (a, b))
    a, b = int(a), int(b)
    for w in range(g.n):
        r = parabolic_residual(d[w], s[w], a, b)
        if r != 0:
            return ClassifyFailure(RESIDUAL_FAIL, (Fraction(a), Fraction(b)), w, r)
    return ParabolicCertificate(a, b)


def linear_certificate(g: Graph) -> LinearCertificate | ClassifyFailure:
    """Fit s(v) = a d(v) + b; success means exactly two main adjacency eigenvalues.

    The root condition is on x^2 - a x - b, i.e. a^2 + 4b > 0.
    """
    _check_input(g)
    if is_regular(g):
        return ClassifyFailure(REGULAR)
    d, s = g.degrees, s_values(g)
    u, v = _distinct_degree_pair(g)
    a = Fraction(s[u] - s[v], d[u] - d[v])
    b = s[u] - a * d[u]
    if a.denominator != 1 or b.denominator != 1:
        return ClassifyFailure(NON_INTEGER_AB, (a, b))
    if a * a + 4 * b <= 0:
        return ClassifyFailure(DISCRIMINANT_FAIL, (a, b))
    a, b = int(a), int(b)
    for w in range(g.n):
        r = s[w] - a * d[w] - b
        if r != 0:
            return ClassifyFailure(RESIDUAL_FAIL, (Fraction(a), Fraction(b)), w, r)
    return LinearCertificate(a, b)


class MainClass(enum.IntEnum):
    ONE = 1
    TWO = 2
    THREE_OR_MORE = 3

    @classmethod
    def from_count(cls, count: int) -> "MainClass":
        return cls(min(count, 3))

    def label(self) -> str:
        return "3+" if self is MainClass.THREE_OR_MORE else str(int(self))


class CombinatorialCount(NamedTuple):
    kind: MainClass
    certificate: ParabolicCertificate | None = None


def main_count_combinatorial(g: Graph) -> CombinatorialCount:
    _check_input(g)
    if is_regular(g):
        return CombinatorialCount(MainClass.ONE)
    cert = parabolic_certificate(g)
    if isinstance(cert, ParabolicCertificate):
        return CombinatorialCount(MainClass.TWO, cert)
    return CombinatorialCount(MainClass.THREE_OR_MORE)


@dataclass(frozen=True)
class ConsistencyReport:
    mu1: float
    mu2: float
    sum_error: float
    product_error: float
    residual: float
    residual_tol: float


def certificate_spectrum_consistency(
    g: Graph, cert: ParabolicCertificate, spec: Spectrum, atol: float = 1e-6
) -> ConsistencyReport:
    """Check that the certificate's quadratic x^2 - a x + 2b has the main eigenvalues as roots."""
    main = spec.main
    if len(main) != 2:
        raise ConsistencyViolation("number of main eigenvalues", len(main), 2)
    mu1, mu2 = main[0].value, main[1].value
    sum_err = abs(mu1 + mu2 - cert.a)
    prod_err = abs(mu1 * mu2 - 2 * cert.b)
    if sum_err > atol:
        raise ConsistencyViolation("mu1 + mu2", mu1 + mu2, cert.a)
    if prod_err > atol:
        raise ConsistencyViolation("mu1 * mu2", mu1 * mu2, 2 * cert.b)
    res = theorem5_residual(g, mu1, mu2)
    if res > spec.tol.residual:
        raise ConsistencyViolation("annihilator residual", res, 0.0)
    return ConsistencyReport(mu1, mu2, sum_err, prod_err, res, spec.tol.residual)


class GapCheck(NamedTuple):
    ok: bool
    witness: str | None = None


def pendant_gap_check(g: Graph, cert: ParabolicCertificate) -> GapCheck:
    """a - b >= 3 when there is a pendant; a - b >= 4 and a >= 5 for unicyclic graphs with one."""
    if min(g.degrees) != 1:
        return GapCheck(True)
    gap = cert.a - cert.b
    if gap < 3:
        return GapCheck(False, f"pendant present but a-b={gap} < 3")
    if is_unicyclic(g):
        if gap < 4:
            return GapCheck(False, f"unicyclic with pendant but a-b={gap} < 4")
        if cert.a < 5:
            return GapCheck(False, f"unicyclic with pendant but a={cert.a} < 5")
    return GapCheck(True)


def core_degrees(g: Graph) -> dict[int, int]:
    """Degree of each non-pendant vertex after all pendant vertices are deleted."""
    pendants = 0
    for v, dv in enumerate(g.degrees):
        if dv == 1:
            pendants |= 1 << v
    return {
        v: (g.rows[v] & ~pendants).bit_count()
        for v in range(g.n)
        if not pendants >> v & 1
    }


def core_degree_check(g: Graph, cert: ParabolicCertificate) -> GapCheck:
    """Every non-pendant vertex keeps its core degree or has degree a - b - 1."""
    target = cert.a - cert.b - 1
    for v, dcore in core_degrees(g).items():
        if g.degrees[v] not in (dcore, target):
            return GapCheck(False, f"vertex {v}: degree {g.degrees[v]} not in {{{dcore}, {target}}}")
    return GapCheck(True)
