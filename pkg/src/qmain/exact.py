"""Exact integer linear algebra for counting main eigenvalues.

The span of ``j, Qj, Q^2 j, ...`` has dimension equal to the degree of the
minimal polynomial annihilating ``j``, whose roots are exactly the main
eigenvalues of ``Q``. So the number of main eigenvalues is the rank of the
walk matrix, and that rank can be computed with no rounding at all.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotConnected
from .graph import Graph, is_connected, signless_laplacian


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ExactMatrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> "ExactMatrix":
        return cls.from_rows(list(zip(*cols)))

    def column(self, k: int) -> list[int]:
        return [r[k] for r in self.entries]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def walk_matrix(g: Graph) -> ExactMatrix:
    """n x n matrix with columns j, Qj, ..., Q^(n-1) j."""
    q = signless_laplacian(g)
    col = [1] * g.n
    cols = [col]
    for _ in range(g.n - 1):
        col = q.matvec(col)
        cols.append(col)
    return ExactMatrix.from_columns(cols)


def integer_rank(m: ExactMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [list(r) for r in m.entries]
    nrows, ncols = m.rows, m.cols
    rank = 0
    prev = 1
    for c in range(ncols):
        if rank == nrows:
            break
        piv = next((i for i in range(rank, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, nrows):
            ai = a[i]
            f = ai[c]
            for k in range(c + 1, ncols):
                # exact by Sylvester's identity
                ai[k] = (p * ai[k] - f * a[rank][k]) // prev
            ai[c] = 0
        prev = p
        rank += 1
    return rank


def main_count_exact(g: Graph) -> int:
    if not is_connected(g):
        raise NotConnected("main eigenvalue count requires a connected graph")
    return integer_rank(walk_matrix(g))
