"""Vector sequences: generation of the 2n visible vectors, radial sorting,
and the alt / scale / prefix-sum operators.

Sequences are stored as (k, 2) int64 arrays so the O(n) pipeline stays in
numpy; iteration yields LatticeVector objects.
"""
from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional

import numpy as np

from .lattice import (
    DEFAULT_TABLE_BUDGET,
    INT64_MAX,
    CapacityError,
    DomainError,
    GcdTable,
    InvariantError,
    LatticeOverflowError,
    LatticeVector,
    as_int_array,
    build_gcd_table,
    turn2,
)

SEED = ((1, 0), (-1, 0), (0, 1), (0, -1))


@dataclass(frozen=True, eq=False)
class VectorSequence:
    vectors: np.ndarray
    sorted_ccw: bool = False

    def __post_init__(self):
        arr = as_int_array(self.vectors)
        if arr is self.vectors:
            arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "vectors", arr)

    @classmethod
    def of(cls, vectors: Iterable, sorted_ccw: bool = False) -> "VectorSequence":
        return cls(as_int_array(list(vectors)), sorted_ccw)

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[LatticeVector]:
        for x, y in self.vectors.tolist():
            yield LatticeVector(x, y)

    def __getitem__(self, i: int) -> LatticeVector:
        x, y = self.vectors[i].tolist()
        return LatticeVector(x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, VectorSequence):
            return NotImplemented
        return np.array_equal(self.vectors, other.vectors)

    def __repr__(self) -> str:
        return f"VectorSequence({self.tolist()!r}, sorted_ccw={self.sorted_ccw})"

    def tolist(self) -> List[tuple]:
        return [tuple(v) for v in self.vectors.tolist()]

    def is_symmetric(self) -> bool:
        """Even length and v[i + t] == -v[i]; only meaningful when sorted."""
        k = len(self.vectors)
        if k % 2:
            return False
        t = k // 2
        return bool(np.array_equal(self.vectors[t:], -self.vectors[:t]))


class Role(enum.IntEnum):
    UNLABELED = 0
    HULL = 1
    INNER = 2


@dataclass(frozen=True, eq=False)
class PointSet:
    """Ordered lattice points with an optional per-point role."""

    points: np.ndarray
    labels: Optional[np.ndarray] = None

    def __post_init__(self):
        arr = as_int_array(self.points)
        if arr is self.points:
            arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "points", arr)
        if self.labels is not None:
            lab = np.asarray(self.labels, dtype=np.int8).copy()
            if lab.shape != (len(arr),):
                raise DomainError("one label per point required")
            lab.setflags(write=False)
            object.__setattr__(self, "labels", lab)

    @classmethod
    def of(cls, points: Iterable, labels=None) -> "PointSet":
        return cls(as_int_array(list(points)), labels)

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[LatticeVector]:
        for x, y in self.points.tolist():
            yield LatticeVector(x, y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return np.array_equal(self.points, other.points)

    def __repr__(self) -> str:
        return f"PointSet({self.tolist()!r})"

    def tolist(self) -> List[tuple]:
        return [tuple(p) for p in self.points.tolist()]

    def roles(self) -> List[Role]:
        if self.labels is None:
            return [Role.UNLABELED] * len(self)
        return [Role(int(c)) for c in self.labels]

    def with_labels(self, labels) -> "PointSet":
        return PointSet(self.points, labels)


@dataclass(frozen=True)
class L1Shell:
    """Lattice vectors of l1-norm exactly k."""

    k: int

    def __post_init__(self):
        if self.k < 1:
            raise DomainError(f"shell index must be >= 1, got {self.k}")

    def visible(self, table: GcdTable) -> np.ndarray:
        """Visible vectors of the shell, excluding axis vectors, in generation
        order: for i = 1..k-1 with gcd(i, k-i) = 1 the quadruple
        (i,j), (-i,-j), (-i,j), (i,-j) with j = k - i.
        """
        k = self.k
        if k - 1 > table.m:
            raise DomainError(f"gcd table bound {table.m} too small for shell {k}")
        i = np.arange(1, k, dtype=np.int64)
        i = i[table.entries[i, k - i] == 1]
        j = k - i
        out = np.empty((len(i), 4, 2), dtype=np.int64)
        out[:, 0, 0], out[:, 0, 1] = i, j
        out[:, 1, 0], out[:, 1, 1] = -i, -j
        out[:, 2, 0], out[:, 2, 1] = -i, j
        out[:, 3, 0], out[:, 3, 1] = i, -j
        return out.reshape(-1, 2)


def _shell_estimate(n: int) -> int:
    # Visible vectors of l1-norm <= k number about 12 k^2 / pi^2.
    return int(math.ceil(math.pi * math.sqrt(2 * n / 12))) + 3


def generate_visible(n: int, table: Optional[GcdTable] = None) -> np.ndarray:
    """The 2n vectors in the order they are generated, before sorting."""
    if n < 3:
        raise DomainError(f"n must be >= 3, got {n}")
    if table is None:
        table = build_gcd_table(_shell_estimate(n))
    chunks = [np.array(SEED, dtype=np.int64)]
    need = 2 * n - 4
    k = 1
    while need > 0:
        k += 1
        if k - 1 > table.m:
            table = build_gcd_table(2 * table.m)
        shell = L1Shell(k).visible(table)
        # need is even and vectors come in antipodal pairs, so the cut never
        # separates a pair; it may split a quadruple.
        take = shell[:need]
        chunks.append(take)
        need -= len(take)
    return np.concatenate(chunks)


def visible_vectors(n: int, table: Optional[GcdTable] = None) -> VectorSequence:
    """Symmetric counterclockwise sequence of 2n visible vectors that contains
    every visible vector of l1-norm below the largest norm used."""
    return radial_sort_bucket(VectorSequence(generate_visible(n, table)))


def bucket_index(i, j, m):
    """ceil(i * m^2 / (i + j)) for first-quadrant (i, j); scalar or array."""
    s = i + j
    return (i * (m * m) + s - 1) // s


def _to_first_quadrant(v: np.ndarray):
    """Rotate every vector by a multiple of 90 degrees into the half-open
    first quadrant (i > 0, j >= 0).

    Returns (quadrant, i, j); quadrant q covers directions [q*90, (q+1)*90)
    degrees. Rotation preserves counterclockwise order within a quadrant.
    """
    x, y = v[:, 0], v[:, 1]
    quadrant = np.where(y > 0, np.where(x > 0, 0, 1), np.where(y < 0, np.where(x < 0, 2, 3), np.where(x > 0, 0, 2)))
    i = np.choose(quadrant, [x, y, -x, -y])
    j = np.choose(quadrant, [y, -x, -y, x])
    return quadrant, i, j


def radial_sort_bucket(V: VectorSequence) -> VectorSequence:
    """Counterclockwise sort from direction (1, 0) in O(|V| + m^2).

    Quadrant interiors are bucketed by the triangle fan o, b_{t-1}, b_t with
    b_t = (t/m, m - t/m) on the line x + y = m; two distinct visible vectors
    of l1-norm < m never share a triangle. Bucket t grows toward the x-axis,
    so counterclockwise order reads the buckets from t = m^2 downward. Each
    quadrant owns a block of m^2 + 2 slots: the axis direction first, then
    its buckets in reverse.
    """
    v = V.vectors
    if len(v) == 0:
        return VectorSequence(v, sorted_ccw=True)
    if np.any((v[:, 0] == 0) & (v[:, 1] == 0)):
        raise DomainError("zero vector has no direction")
    m = int(np.abs(v).sum(axis=1).max()) + 1
    block = m * m + 2
    if 4 * block > DEFAULT_TABLE_BUDGET:
        raise CapacityError(f"{4 * block} buckets exceed the configured budget")
    quadrant, i, j = _to_first_quadrant(v)
    axis = j == 0
    if np.any(axis & (i != 1)):
        raise InvariantError("non-visible axis vector")

    t = bucket_index(i, j, m)
    key = quadrant * block + np.where(axis, 0, 1 + m * m - t)
    buckets = np.full(4 * block, -1, dtype=np.int32 if len(v) < 2**31 else np.int64)
    buckets[key] = np.arange(len(v))
    idx = buckets[buckets >= 0]
    # a shared bucket loses all but one writer
    if len(idx) != len(v):
        raise InvariantError("two vectors landed in one bucket; input is not distinct visible vectors")
    return VectorSequence(v[idx], sorted_ccw=True)


def _half(x: int, y: int) -> int:
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _ccw_compare(a, b) -> int:
    ha, hb = _half(*a), _half(*b)
    if ha != hb:
        return ha - hb
    t = turn2(a, b)
    if t == 0:
        raise DuplicateDirectionError(f"{a} and {b} share a direction")
    return -1 if t > 0 else 1


class DuplicateDirectionError(DomainError):
    pass


def radial_sort_compare(V: VectorSequence) -> VectorSequence:
    """Reference counterclockwise sort by an exact comparator (half-plane, then
    sign of the cross product)."""
    pts = V.tolist()
    if any(p == (0, 0) for p in pts):
        raise DomainError("zero vector has no direction")
    pts.sort(key=functools.cmp_to_key(_ccw_compare))
    return VectorSequence(as_int_array(pts), sorted_ccw=True)


def alt(V: VectorSequence) -> VectorSequence:
    """Swap each adjacent pair: [v2, v1, v4, v3, ...]."""
    v = V.vectors
    if len(v) % 2:
        raise DomainError("alt needs an even number of vectors")
    out = v.reshape(-1, 2, 2)[:, ::-1, :].reshape(-1, 2)
    return VectorSequence(out)


def scale(c: int, V: VectorSequence) -> VectorSequence:
    if c == 0:
        raise DomainError("scale factor must be nonzero")
    v = V.vectors
    if len(v) and int(np.abs(v).max()) * abs(c) > INT64_MAX:
        raise LatticeOverflowError(f"scaling by {c} overflows 64-bit coordinates")
    # A positive factor keeps directions and therefore the sorted order.
    return VectorSequence(v * c, sorted_ccw=V.sorted_ccw and c > 0)


def accumulate(V: VectorSequence) -> PointSet:
    """Prefix sums p_1 = v_1, p_i = p_{i-1} + v_i."""
    v = V.vectors
    if len(v) == 0:
        raise DomainError("cannot accumulate an empty sequence")
    # float bound is conservative: any true overflow trips it
    if np.abs(v.astype(np.float64)).sum(axis=0).max() >= 2.0**62:
        raise LatticeOverflowError("prefix sums may overflow 64-bit coordinates")
    return PointSet(np.cumsum(v, axis=0))
