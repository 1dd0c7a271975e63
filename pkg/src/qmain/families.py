"""Named graph families and recognition of enumerated graphs among them.

Spec strings: ``star:n``, ``dstar:p,q``, ``ttree:a``, ``cycle:n``,
``path:n``, ``g1:r,k``, ``g2:t``, ``complete:n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .canon import tree_canonical_code, unicyclic_canonical_code
from .errors import InvalidParameter
from .graph import Graph, from_edges, is_connected

_ARITY = {
    "star": 1,
    "dstar": 2,
    "ttree": 1,
    "cycle": 1,
    "path": 1,
    "g1": 2,
    "g2": 1,
    "complete": 1,
}


@dataclass(frozen=True, order=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise InvalidParameter(f"unknown family {self.kind!r}")
        if len(self.params) != _ARITY[self.kind]:
            raise InvalidParameter(f"{self.kind} takes {_ARITY[self.kind]} parameter(s), got {len(self.params)}")

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        kind, sep, rest = text.strip().partition(":")
        if not sep:
            raise InvalidParameter(f"family spec {text!r} must look like 'kind:params'")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise InvalidParameter(f"non-integer parameter in {text!r}") from None
        return cls(kind.lower(), params)

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def star(n: int) -> FamilySpec:
    return FamilySpec("star", (n,))


def double_star(p: int, q: int) -> FamilySpec:
    return FamilySpec("dstar", (p, q))


def t_tree(a: int) -> FamilySpec:
    return FamilySpec("ttree", (a,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec("cycle", (n,))


def path(n: int) -> FamilySpec:
    return FamilySpec("path", (n,))


def g1(r: int, k: int) -> FamilySpec:
    return FamilySpec("g1", (r, k))


def g2(t: int) -> FamilySpec:
    return FamilySpec("g2", (t,))


def complete(n: int) -> FamilySpec:
    return FamilySpec("complete", (n,))


def _need(cond: bool, spec: FamilySpec, bound: str) -> None:
    if not cond:
        raise InvalidParameter(f"{spec}: requires {bound}")


def _cycle_edges(r: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % r) for i in range(r)]


def build(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "star":
        (n,) = p
        _need(n >= 3, spec, "n >= 3")
        return from_edges(n, [(0, i) for i in range(1, n)])
    if kind == "dstar":
        a, b = p
        _need(a >= 2 and b >= 2, spec, "p, q >= 2")
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a - 1)]
        edges += [(1, 1 + a + i) for i in range(b - 1)]
        return from_edges(a + b, edges)
    if kind == "ttree":
        (a,) = p
        _need(a >= 2, spec, "a >= 2")
        hub = a * a - a + 1
        edges = [(0, i) for i in range(1, hub + 1)]
        nxt = hub + 1
        for i in range(1, hub + 1):
            for _ in range(a - 1):
                edges.append((i, nxt))
                nxt += 1
        return from_edges(nxt, edges)
    if kind == "cycle":
        (n,) = p
        _need(n >= 3, spec, "n >= 3")
        return from_edges(n, _cycle_edges(n))
    if kind == "path":
        (n,) = p
        _need(n >= 2, spec, "n >= 2")
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "g1":
        r, k = p
        _need(r >= 3, spec, "r >= 3")
        _need(k >= 1, spec, "k >= 1")
        edges = _cycle_edges(r)
        nxt = r
        for i in range(r):
            for _ in range(k):
                edges.append((i, nxt))
                nxt += 1
        return from_edges(nxt, edges)
    if kind == "g2":
        (t,) = p
        _need(t >= 1, spec, "t >= 1")
        r = 3 * t
        edges = _cycle_edges(r)
        edges += [(3 * s, r + s) for s in range(t)]
        return from_edges(4 * t, edges)
    if kind == "complete":
        (n,) = p
        _need(n >= 1, spec, "n >= 1")
        return from_edges(n, [(i, j) for j in range(n) for i in range(j)])
    raise InvalidParameter(f"unknown family {kind!r}")


def _tree_candidates(n: int) -> list[FamilySpec]:
    out = []
    if n >= 3:
        out.append(star(n))
    out += [double_star(p, n - p) for p in range(2, n // 2 + 1)]
    a = 2
    while 1 + (a * a - a + 1) * a <= n:
        if 1 + (a * a - a + 1) * a == n:
            out.append(t_tree(a))
        a += 1
    if n >= 2:
        out.append(path(n))
    return out


def _unicyclic_candidates(n: int) -> list[FamilySpec]:
    out = [cycle(n)] if n >= 3 else []
    out += [g1(r, n // r - 1) for r in range(3, n // 2 + 1) if n % r == 0]
    if n % 4 == 0:
        out.append(g2(n // 4))
    return out


@lru_cache(maxsize=None)
def _tree_index(n: int) -> dict[bytes, FamilySpec]:
    index: dict[bytes, FamilySpec] = {}
    for spec in _tree_candidates(n):
        index.setdefault(tree_canonical_code(build(spec)), spec)
    return index


@lru_cache(maxsize=None)
def _unicyclic_index(n: int) -> dict[bytes, FamilySpec]:
    index: dict[bytes, FamilySpec] = {}
    for spec in _unicyclic_candidates(n):
        index.setdefault(unicyclic_canonical_code(build(spec)), spec)
    return index


def identify(g: Graph) -> FamilySpec | None:
    """The first matching family in a fixed preference order, or ``None``."""
    if not is_connected(g):
        return None
    found = None
    if g.m == g.n - 1:
        found = _tree_index(g.n).get(tree_canonical_code(g))
    elif g.m == g.n:
        found = _unicyclic_index(g.n).get(unicyclic_canonical_code(g))
    if found is None and g.m == g.n * (g.n - 1) // 2:
        found = complete(g.n)
    return found
