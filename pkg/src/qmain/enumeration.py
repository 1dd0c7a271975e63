"""Exhaustive enumeration of small trees and unicyclic graphs, with
theorem-verification harnesses and main-count censuses."""

from __future__ import annotations

import csv
import io
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .canon import tree_canonical_code, unicyclic_canonical_code
from .errors import BudgetExceeded, InvalidParameter, TheoremViolation
from .exact import main_count_exact
from .families import FamilySpec, build, cycle, double_star, g1, g2, identify, star
from .formats import write_graph6
from .graph import Graph, from_edges
from .spectra import main_count_spectral
from .walks import MainClass, ParabolicCertificate, main_count_combinatorial, parabolic_certificate

TREES = "trees"
UNICYCLIC = "unicyclic"
CLASSES = (TREES, UNICYCLIC)

EXACT = "exact"
SPECTRAL = "spectral"
COMBINATORIAL = "combinatorial"
METHODS = (EXACT, SPECTRAL, COMBINATORIAL)

DEFAULT_BUDGET = {TREES: 12, UNICYCLIC: 11}
MIN_ORDER = {TREES: 1, UNICYCLIC: 3}


def budget(cls: str) -> int:
    """Largest order allowed for ``cls``; ``QMAIN_BUDGET`` can only raise it."""
    limit = DEFAULT_BUDGET[cls]
    env = os.environ.get("QMAIN_BUDGET")
    if env:
        try:
            limit = max(limit, int(env))
        except ValueError:
            raise InvalidParameter(f"QMAIN_BUDGET must be an integer, got {env!r}") from None
    return limit


@lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n < 1:
        raise InvalidParameter("tree order must be >= 1")
    if n == 1:
        return (from_edges(1, []),)
    found: dict[bytes, Graph] = {}
    for t in _trees(n - 1):
        base = list(t.rows) + [0]
        for v in range(n - 1):
            rows = base.copy()
            rows[v] |= 1 << (n - 1)
            rows[n - 1] = 1 << v
            g = Graph(n, tuple(rows))
            found.setdefault(tree_canonical_code(g), g)
    return tuple(found[c] for c in sorted(found))


def trees_iter(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class, ordered by canonical code."""
    return iter(_trees(n))


@lru_cache(maxsize=None)
def _unicyclic(n: int) -> tuple[Graph, ...]:
    if n < 3:
        raise InvalidParameter("unicyclic order must be >= 3")
    found: dict[bytes, Graph] = {}
    for t in _trees(n):
        for v in range(n):
            for u in range(v):
                if not t.rows[v] >> u & 1:
                    g = t.add_edge(u, v)
                    found.setdefault(unicyclic_canonical_code(g), g)
    return tuple(found[c] for c in sorted(found))


def unicyclic_iter(n: int) -> Iterator[Graph]:
    """One connected unicyclic graph per isomorphism class, ordered by canonical code."""
    return iter(_unicyclic(n))


def graphs_of(cls: str, n: int) -> tuple[Graph, ...]:
    if cls == TREES:
        return _trees(n)
    if cls == UNICYCLIC:
        return _unicyclic(n)
    raise InvalidParameter(f"unknown class {cls!r}")


def classify(g: Graph, method: str = EXACT) -> int:
    """Main-eigenvalue count; the combinatorial method reports 3 for 'three or more'."""
    if method == EXACT:
        return main_count_exact(g)
    if method == SPECTRAL:
        return main_count_spectral(g)
    if method == COMBINATORIAL:
        return int(main_count_combinatorial(g).kind)
    raise InvalidParameter(f"unknown method {method!r}")


def _classify_chunk(args: tuple[list[Graph], str]) -> list[int]:
    graphs, method = args
    return [classify(g, method) for g in graphs]


def classify_many(graphs: Iterable[Graph], method: str = EXACT, workers: int = 1) -> list[int]:
    """Classify in input order; ``workers > 1`` uses a process pool with ordered merge."""
    graphs = list(graphs)
    if workers <= 1 or len(graphs) < 2 * workers:
        return [classify(g, method) for g in graphs]
    size = -(-len(graphs) // workers)
    chunks = [(graphs[i:i + size], method) for i in range(0, len(graphs), size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return [c for part in pool.map(_classify_chunk, chunks) for c in part]


@dataclass
class TwoMainEntry:
    graph6: str
    a: int
    b: int
    family: str

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "a": self.a, "b": self.b, "family": self.family}


@dataclass
class ClassReport:
    n: int
    cls: str
    total: int
    histogram: dict[int, int]
    two_main: list[TwoMainEntry] = field(default_factory=list)
    method: str = EXACT

    def bucket_histogram(self) -> dict[str, int]:
        """Histogram folded into the classes 1, 2 and 3+."""
        out: Counter[str] = Counter()
        for count, num in self.histogram.items():
            out[MainClass.from_count(count).label()] += num
        return dict(sorted(out.items()))

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "class": self.cls,
            "total": self.total,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "twoMain": [e.to_dict() for e in self.two_main],
        }


def _family_name(g: Graph) -> str:
    spec = identify(g)
    return str(spec) if spec is not None else "Unknown"


def _report(cls: str, n: int, graphs: tuple[Graph, ...], counts: list[int], method: str) -> ClassReport:
    two = []
    for g, c in zip(graphs, counts):
        if c == 2:
            cert = parabolic_certificate(g)
            if not isinstance(cert, ParabolicCertificate):
                raise TheoremViolation(
                    f"{cls} n={n}: two main eigenvalues but no parabolic certificate ({cert.describe()})",
                    n, extra=[write_graph6(g)],
                )
            two.append(TwoMainEntry(write_graph6(g), cert.a, cert.b, _family_name(g)))
    return ClassReport(n, cls, len(graphs), dict(sorted(Counter(counts).items())), two, method)


def _check_range(cls: str, max_n: int, low: int) -> None:
    if cls not in CLASSES:
        raise InvalidParameter(f"unknown class {cls!r}")
    if max_n < low:
        raise InvalidParameter(f"max order must be >= {low}, got {max_n}")
    limit = budget(cls)
    if max_n > limit:
        raise BudgetExceeded(f"{cls} up to n={max_n} exceeds the budget n <= {limit} (raise with QMAIN_BUDGET)")


def census(cls: str, max_n: int, method: str = EXACT, workers: int = 1) -> list[ClassReport]:
    if method not in METHODS:
        raise InvalidParameter(f"unknown method {method!r}")
    _check_range(cls, max_n, MIN_ORDER.get(cls, 1))
    reports = []
    for n in range(MIN_ORDER[cls], max_n + 1):
        graphs = graphs_of(cls, n)
        reports.append(_report(cls, n, graphs, classify_many(graphs, method, workers), method))
    return reports


def _codes(graphs: Iterable[Graph], coder) -> dict[bytes, Graph]:
    return {coder(g): g for g in graphs}


def expected_two_main(cls: str, n: int) -> list[FamilySpec]:
    """Families predicted to have exactly two main eigenvalues at order ``n``."""
    if cls == TREES:
        out = [star(n)]
        if n % 2 == 0 and n >= 4:
            out.append(double_star(n // 2, n // 2))
        return out
    out = [g1(r, n // r - 1) for r in range(3, n // 2 + 1) if n % r == 0]
    if n % 4 == 0:
        out.append(g2(n // 4))
    return out


def _verify(cls: str, max_n: int, workers: int) -> list[ClassReport]:
    _check_range(cls, max_n, 3)
    coder = tree_canonical_code if cls == TREES else unicyclic_canonical_code
    reports = []
    for n in range(3, max_n + 1):
        graphs = graphs_of(cls, n)
        counts = classify_many(graphs, EXACT, workers)
        report = _report(cls, n, graphs, counts, EXACT)
        if cls == UNICYCLIC:
            cyc = coder(build(cycle(n)))
            for g, c in zip(graphs, counts):
                if coder(g) == cyc and c != 1:
                    raise TheoremViolation(f"C{n} has {c} main eigenvalues, expected 1", n, extra=[write_graph6(g)])
        found = _codes((g for g, c in zip(graphs, counts) if c == 2), coder)
        expected = _codes((build(s) for s in expected_two_main(cls, n)), coder)
        extra = [write_graph6(found[k]) for k in sorted(found.keys() - expected.keys())]
        missing = [write_graph6(expected[k]) for k in sorted(expected.keys() - found.keys())]
        if extra or missing:
            raise TheoremViolation(f"{cls} n={n}: exactly-two set differs from prediction", n, extra, missing)
        reports.append(report)
    return reports


def verify_theorem7(max_n: int, workers: int = 1) -> list[ClassReport]:
    """Trees with exactly two main eigenvalues are S_n and, for even n, S_{n/2,n/2}."""
    return _verify(TREES, max_n, workers)


def verify_theorem10(max_n: int, workers: int = 1) -> list[ClassReport]:
    """Unicyclic graphs with exactly two main eigenvalues are G1(r, k) and G2(t); cycles have one."""
    return _verify(UNICYCLIC, max_n, workers)


def reports_to_json(reports: list[ClassReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


CSV_COLUMNS = ["graph6", "n", "mainCountExact", "a", "b", "family"]


def census_csv(cls: str, max_n: int) -> str:
    """One row per enumerated graph; ``a``/``b`` empty unless a certificate exists."""
    _check_range(cls, max_n, MIN_ORDER.get(cls, 1))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for n in range(MIN_ORDER[cls], max_n + 1):
        for g in graphs_of(cls, n):
            cert = parabolic_certificate(g)
            ok = isinstance(cert, ParabolicCertificate)
            writer.writerow([
                write_graph6(g), n, main_count_exact(g),
                cert.a if ok else "", cert.b if ok else "", _family_name(g),
            ])
    return buf.getvalue()
