"""Simple undirected graphs stored as per-vertex neighbor bitsets."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DuplicateEdge, InvalidEdge


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``u ~ v``. Use
    :func:`from_edges` or :meth:`from_rows` instead of the raw constructor
    unless the rows are already known to be symmetric and loop-free.
    """

    n: int
    rows: tuple[int, ...]
    degrees: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(self.rows) != self.n:
            raise ValueError("rows must have one entry per vertex")
        object.__setattr__(self, "degrees", tuple(r.bit_count() for r in self.rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for v, r in enumerate(rows):
            if r & ~full:
                raise IndexError(f"vertex {v} has a neighbor outside 0..{n - 1}")
            if r >> v & 1:
                raise InvalidEdge(f"self-loop at vertex {v}")
            for u in _bits(r):
                if not rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if self.has_edge(u, v):
            raise DuplicateEdge(f"edge ({u}, {v}) already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise IndexError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InvalidEdge(f"self-loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise IndexError(f"vertex {v} out of range for n={g.n}")
    return g.degrees[v]


def degree_sequence(g: Graph) -> list[int]:
    return list(g.degrees)


def s_values(g: Graph) -> list[int]:
    """Number of 2-walks from each vertex, i.e. the sum of its neighbors' degrees."""
    d = g.degrees
    return [sum(d[u] for u in _bits(r)) for r in g.rows]


@dataclass(frozen=True)
class IntSymMatrix:
    """Symmetric integer matrix held as a tuple of row tuples."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.entries)
        for i, row in enumerate(self.entries):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j in range(i):
                if row[j] != self.entries[j][i]:
                    raise ValueError(f"entries ({i}, {j}) and ({j}, {i}) differ")

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def diagonal(self) -> list[int]:
        return [self.entries[i][i] for i in range(self.order)]

    def max_abs(self) -> int:
        return max((abs(x) for row in self.entries for x in row), default=0)

    def matvec(self, x: Sequence[int]) -> list[int]:
        return [sum(a * b for a, b in zip(row, x)) for row in self.entries]

    def to_numpy(self) -> np.ndarray:
        return np.array(self.entries, dtype=float)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def signless_laplacian(g: Graph) -> IntSymMatrix:
    """Q = D + A."""
    rows = []
    for v, r in enumerate(g.rows):
        rows.append(tuple(g.degrees[v] if u == v else (r >> u & 1) for u in range(g.n)))
    return IntSymMatrix(tuple(rows))


def adjacency_matrix(g: Graph) -> IntSymMatrix:
    return IntSymMatrix(tuple(tuple(r >> u & 1 for u in range(g.n)) for r in g.rows))


def is_connected(g: Graph) -> bool:
    seen = frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees)) == 1


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def is_unicyclic(g: Graph) -> bool:
    return g.m == g.n and is_connected(g)
