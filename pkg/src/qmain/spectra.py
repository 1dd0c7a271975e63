"""Floating-point spectral decomposition of the signless Laplacian.

Eigenvalues come from a cyclic Jacobi solver, are clustered into distinct
eigenvalues with multiplicities, and each cluster gets its orthogonal
projector and main angle ``||P j|| / sqrt(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import NotConnected, NotSymmetric
from .graph import Graph, IntSymMatrix, is_connected, signless_laplacian


@dataclass(frozen=True)
class Tolerances:
    """Numerical cutoffs.

    ``eigen_cluster`` and ``residual`` left as ``None`` are derived from the
    matrix scale ``max|Q| * n`` by :meth:`resolve`.
    """

    eigen_cluster: float | None = None
    main_angle_cut: float = 1e-6
    residual: float | None = None
    cluster_rel: float = 1e-8
    residual_rel: float = 1e-7

    def __post_init__(self) -> None:
        for name in ("eigen_cluster", "main_angle_cut", "residual", "cluster_rel", "residual_rel"):
            val = getattr(self, name)
            if val is not None and not val > 0:
                raise ValueError(f"tolerance {name} must be strictly positive")

    def resolve(self, scale: float) -> "Tolerances":
        scale = max(scale, 1.0)
        return replace(
            self,
            eigen_cluster=self.eigen_cluster if self.eigen_cluster is not None else self.cluster_rel * scale,
            residual=self.residual if self.residual is not None else self.residual_rel * scale,
        )


DEFAULT_TOL = Tolerances()


def _as_array(m) -> np.ndarray:
    if isinstance(m, IntSymMatrix):
        return m.to_numpy()
    return np.array(m, dtype=float)


def _rotate(rows, p: int, q: int, c: float, s: float) -> None:
    for r in rows:
        x, y = r[p], r[q]
        r[p] = c * x - s * y
        r[q] = s * x + c * y


def jacobi_eigh(m, max_sweeps: int = 64) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi rotations.

    Returns ``(values, vectors)`` with values in descending order and the
    eigenvectors as orthonormal columns. Sweeps stop once the off-diagonal
    Frobenius norm drops below 1e-13 of the matrix norm. Plain Python loops:
    for n <= 16 they beat per-rotation numpy calls.
    """
    arr = _as_array(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotSymmetric("matrix must be square")
    if not np.array_equal(arr, arr.T):
        raise NotSymmetric("matrix is not symmetric")
    n = arr.shape[0]
    a = arr.tolist()
    v = np.eye(n).tolist()
    fro = max(float(np.linalg.norm(arr)), 1.0)
    stop = 1e-13 * fro
    negligible = 1e-20 * fro
    for _ in range(max_sweeps):
        off = math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))
        if off <= stop:
            break
        for p in range(n - 1):
            row_p = a[p]
            for q in range(p + 1, n):
                apq = row_p[q]
                if abs(apq) <= negligible:
                    continue
                row_q = a[q]
                theta = (row_q[q] - row_p[p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                _rotate(a, p, q, c, s)
                for k in range(n):
                    x, y = row_p[k], row_q[k]
                    row_p[k] = c * x - s * y
                    row_q[k] = s * x + c * y
                row_p[q] = row_q[p] = 0.0
                _rotate(v, p, q, c, s)
    else:
        raise RuntimeError(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.array([a[i][i] for i in range(n)])
    order = np.argsort(-values, kind="stable")
    return values[order], np.array(v)[:, order]


@dataclass(frozen=True)
class Cluster:
    value: float
    multiplicity: int
    basis: np.ndarray  # n x multiplicity, orthonormal columns
    main_angle: float = float("nan")
    main: bool = False


def cluster(values: Sequence[float], tol: float | Tolerances = DEFAULT_TOL, vectors: np.ndarray | None = None) -> list[Cluster]:
    """Merge consecutive descending values closer than the cluster tolerance."""
    if isinstance(tol, Tolerances):
        if tol.eigen_cluster is None:
            scale = max((abs(x) for x in values), default=1.0) * max(len(values), 1)
            tol = tol.resolve(scale)
        tol = tol.eigen_cluster
    groups: list[list[int]] = []
    for i, x in enumerate(values):
        if groups and values[groups[-1][-1]] - x <= tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    out = []
    for grp in groups:
        val = float(np.mean([values[i] for i in grp]))
        basis = vectors[:, grp] if vectors is not None else np.empty((0, len(grp)))
        out.append(Cluster(val, len(grp), basis))
    return out


def projector(c: Cluster) -> np.ndarray:
    """Orthogonal projector onto the cluster's eigenspace."""
    return c.basis @ c.basis.T


@dataclass(frozen=True)
class Spectrum:
    n: int
    clusters: tuple[Cluster, ...]
    tol: Tolerances
    values: np.ndarray  # raw Jacobi eigenvalues, descending
    vectors: np.ndarray

    @property
    def main(self) -> list[Cluster]:
        return [c for c in self.clusters if c.main]

    def projectors(self) -> list[np.ndarray]:
        return [projector(c) for c in self.clusters]


def spectrum(g: Graph, tol: Tolerances = DEFAULT_TOL) -> Spectrum:
    if not is_connected(g):
        raise NotConnected("spectrum of a disconnected graph is not classified")
    return _spectrum(g, tol)


@lru_cache(maxsize=8192)
def _spectrum(g: Graph, tol: Tolerances) -> Spectrum:
    q = signless_laplacian(g)
    tol = tol.resolve(q.max_abs() * g.n)
    values, vectors = jacobi_eigh(q)
    ones = np.ones(g.n)
    clusters = []
    for c in cluster(values, tol, vectors):
        angle = float(np.linalg.norm(projector(c) @ ones)) / math.sqrt(g.n)
        clusters.append(replace(c, main_angle=angle, main=angle > tol.main_angle_cut))
    return Spectrum(g.n, tuple(clusters), tol, values, vectors)


def main_eigenvalues(g: Graph, tol: Tolerances = DEFAULT_TOL) -> list[tuple[float, int, float]]:
    """``(value, multiplicity, main_angle)`` for each main eigenvalue, descending."""
    return [(c.value, c.multiplicity, c.main_angle) for c in spectrum(g, tol).main]


def main_count_spectral(g: Graph, tol: Tolerances = DEFAULT_TOL) -> int:
    return len(spectrum(g, tol).main)


def theorem5_residual(g: Graph, mu1: float, mu2: float) -> float:
    """``||(Q - mu1 I)(Q - mu2 I) j||_inf`` evaluated as Q^2 j - (mu1+mu2) Q j + mu1 mu2 j."""
    q = signless_laplacian(g)
    qj = q.matvec([1] * g.n)
    q2j = q.matvec(qj)
    lin, const = mu1 + mu2, mu1 * mu2
    return max(abs(b - lin * a + const) for a, b in zip(qj, q2j))
