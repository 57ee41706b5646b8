"""Point-set constructions: the O(n^{3/2}) double circle, Jarnik polygons,
and two quadratic-size reference constructions."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .lattice import DomainError, GcdTable, build_gcd_table
from .sequences import (
    PointSet,
    Role,
    VectorSequence,
    accumulate,
    alt,
    radial_sort_bucket,
    visible_vectors,
)


@dataclass(frozen=True)
class JarnikSummary:
    Q: int
    vertex_count: int
    size_S: int

    @property
    def count_ratio(self) -> float:
        """vertex_count / (24 Q^2 / pi^2)"""
        return self.vertex_count / (24 * self.Q**2 / math.pi**2)

    @property
    def size_ratio(self) -> float:
        """size_S / (6 Q^3 / pi^2)"""
        return self.size_S / (6 * self.Q**3 / math.pi**2)


def translate_to_grid(P: PointSet) -> PointSet:
    if len(P) == 0:
        raise DomainError("cannot translate an empty point set")
    return PointSet(P.points - P.points.min(axis=0), P.labels)


def double_circle_edges(n: int, table: Optional[GcdTable] = None) -> VectorSequence:
    """The edge vectors 3*w_1, ..., 3*w_{2n} of the double circle.

    With (a, b) the i-th pair of alt(V) and lambda = 1/3:
    3*w_i = 2a + b and 3*w_{i+1} = a + 2b, all integral.
    """
    pairs = alt(visible_vectors(n, table)).vectors.reshape(-1, 2, 2)
    a, b = pairs[:, 0], pairs[:, 1]
    w = np.empty_like(pairs)
    w[:, 0] = 2 * a + b
    w[:, 1] = a + 2 * b
    return VectorSequence(w.reshape(-1, 2))


def build_double_circle(n: int, translate: bool = True, table: Optional[GcdTable] = None) -> PointSet:
    """2n lattice points forming a double circle on a grid of side O(n^{3/2}).

    Points come out in construction order (prefix sums of the edge vectors),
    which alternates inner point, hull vertex, inner point, ...; labels are
    left unset and can be attached with verification.label_roles.
    """
    P = accumulate(double_circle_edges(n, table))
    return translate_to_grid(P) if translate else P


def jarnik_vectors(Q: int, table: Optional[GcdTable] = None) -> VectorSequence:
    """Visible vectors with max(|i|, |j|) <= Q, sorted counterclockwise."""
    if Q < 1:
        raise DomainError(f"Q must be >= 1, got {Q}")
    if table is None or table.m < Q:
        table = build_gcd_table(Q)
    r = np.arange(-Q, Q + 1)
    x, y = np.meshgrid(r, r, indexing="ij")
    x, y = x.ravel(), y.ravel()
    keep = table.entries[np.abs(x), np.abs(y)] == 1
    return radial_sort_bucket(VectorSequence(np.stack([x[keep], y[keep]], axis=1)))


def jarnik_polygon(Q: int, translate: bool = True) -> PointSet:
    P = accumulate(jarnik_vectors(Q))
    P = PointSet(P.points, np.full(len(P), Role.HULL))
    return translate_to_grid(P) if translate else P


def jarnik_counts(Q: int, table: Optional[GcdTable] = None) -> JarnikSummary:
    """Exact vertex count 4 + 4 #coprime and size 1 + 2 sum(i) over coprime
    pairs (i, j) in [1, Q]^2."""
    if Q < 1:
        raise DomainError(f"Q must be >= 1, got {Q}")
    if table is None or table.m < Q:
        table = build_gcd_table(Q)
    coprime = table.entries[1 : Q + 1, 1 : Q + 1] == 1
    count = int(coprime.sum())
    i = np.arange(1, Q + 1, dtype=np.int64)
    isum = int((coprime.sum(axis=1).astype(np.int64) * i).sum())
    return JarnikSummary(Q, 4 + 4 * count, 1 + 2 * isum)


def _f(x):
    return x * x + x


def quadratic_baseline(n: int) -> PointSet:
    """(i, f(i)) for odd i and (i, f(i) + 2) for even i, i = 1..2n-1, with
    f(x) = x^2 + x, then (n, 2n^2 - n) just below the long hull edge."""
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    i = np.arange(1, 2 * n, dtype=np.int64)
    y = _f(i) + np.where(i % 2 == 0, 2, 0)
    pts = np.stack([i, y], axis=1)
    last = np.array([[n, 2 * n * n - n]], dtype=np.int64)
    return PointSet(np.concatenate([pts, last]))


def naive_vectors(n: int) -> VectorSequence:
    """[(1,1), (1,2), ..., (1,n)] followed by their negations."""
    if n < 4 or n % 2:
        raise DomainError(f"naive construction needs even n >= 4, got {n}")
    half = np.stack([np.ones(n, dtype=np.int64), np.arange(1, n + 1, dtype=np.int64)], axis=1)
    return VectorSequence(np.concatenate([half, -half]), sorted_ccw=False)


def naive_symmetric(n: int) -> PointSet:
    return accumulate(alt(naive_vectors(n)))


METHODS = {
    "doublecircle": build_double_circle,
    "baseline": quadratic_baseline,
    "naive": naive_symmetric,
}
