"""Exact integer primitives on the lattice Z^2.

Everything here works on Python ints (exact), with explicit checks that
values stay inside the signed 64-bit range so an overflow is a loud error
rather than silent wraparound in the numpy code paths downstream.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple, Union

import numpy as np

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

# Max |coordinate| for which int64 cross products of coordinate differences
# are exact: |dx|,|dy| <= 2**31 so each product is <= 2**62.
SAFE_CROSS_COORD = 2**30

DEFAULT_TABLE_BUDGET = 2**27  # cells


class LatticeError(Exception):
    """Base class for errors raised by this package."""


class DomainError(LatticeError, ValueError):
    pass


class LatticeOverflowError(LatticeError, OverflowError):
    pass


class CapacityError(LatticeError, MemoryError):
    pass


class ContractError(LatticeError, IndexError):
    pass


class InvariantError(LatticeError, RuntimeError):
    pass


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise LatticeOverflowError(f"{what} {value} does not fit in 64 bits")
    return value


@dataclass(frozen=True)
class LatticeVector:
    """An integer point of the plane, also read as the vector from the origin."""

    x: int
    y: int

    def __post_init__(self):
        for c in (self.x, self.y):
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
                raise TypeError(f"lattice coordinates must be integers, got {c!r}")
        object.__setattr__(self, "x", check_int64(int(self.x), "x"))
        object.__setattr__(self, "y", check_int64(int(self.y), "y"))

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        ox, oy = other
        return LatticeVector(self.x + ox, self.y + oy)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        ox, oy = other
        return LatticeVector(self.x - ox, self.y - oy)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, c: int) -> "LatticeVector":
        return LatticeVector(c * self.x, c * self.y)

    __rmul__ = __mul__

    def l1(self) -> int:
        return abs(self.x) + abs(self.y)

    def astuple(self) -> Tuple[int, int]:
        return (self.x, self.y)


Vec = Union[LatticeVector, Sequence[int]]
ORIGIN = LatticeVector(0, 0)

# A turn value is twice the signed area of a lattice triangle; plain int.
TurnValue = int


def _xy(p: Vec) -> Tuple[int, int]:
    x, y = p
    return int(x), int(y)


@dataclass(frozen=True)
class GcdTable:
    """gcd(i, j) for 0 <= i, j <= m, answered by a single array lookup."""

    m: int
    entries: np.ndarray

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        return gcd_lookup(self, i, j)


def build_gcd_table(m: int, budget: int = DEFAULT_TABLE_BUDGET) -> GcdTable:
    """Fill the (m+1) x (m+1) gcd table from gcd(i,i)=i, gcd(0,k)=k and
    gcd(i,j) = gcd(i-j, j) for i > j.

    Rows are completed in order of increasing max(i, j); every cell read by
    the recurrence lies in an earlier row, so each cell is written once.
    """
    if m < 1:
        raise DomainError(f"gcd table bound must be >= 1, got {m}")
    if (m + 1) ** 2 > budget:
        raise CapacityError(f"gcd table of side {m + 1} exceeds budget of {budget} cells")
    dtype = np.int32 if m < 2**31 else np.int64
    g = np.zeros((m + 1, m + 1), dtype=dtype)
    idx = np.arange(m + 1)
    g[0, :] = idx
    g[:, 0] = idx
    for i in range(1, m + 1):
        g[i, i] = i
        if i > 1:
            j = idx[1:i]
            g[i, 1:i] = g[i - j, j]
            g[1:i, i] = g[i, 1:i]
    g.setflags(write=False)
    return GcdTable(m, g)


def gcd_lookup(t: GcdTable, i: int, j: int) -> int:
    if not (0 <= i <= t.m and 0 <= j <= t.m):
        raise ContractError(f"({i}, {j}) outside gcd table of bound {t.m}")
    return int(t.entries[i, j])


def is_visible(v: Vec, t: GcdTable) -> bool:
    x, y = _xy(v)
    if x == 0 and y == 0:
        raise DomainError("visibility is undefined for the zero vector")
    return gcd_lookup(t, abs(x), abs(y)) == 1


def turn3(p: Vec, q: Vec, r: Vec) -> TurnValue:
    """Determinant of the homogeneous 3x3 matrix [p 1; q 1; r 1].

    Positive for a counterclockwise triple, negative for clockwise, zero
    when collinear.
    """
    px, py = _xy(p)
    qx, qy = _xy(q)
    rx, ry = _xy(r)
    return check_int64((qx - px) * (ry - py) - (qy - py) * (rx - px), "turn")


def turn2(p: Vec, q: Vec) -> TurnValue:
    px, py = _xy(p)
    qx, qy = _xy(q)
    return check_int64(px * qy - py * qx, "turn")


def doubled_area(p: Vec, q: Vec, r: Vec) -> int:
    return abs(turn3(p, q, r))


def segment_lattice_points(p: Vec, q: Vec) -> int:
    """Lattice points strictly inside segment pq."""
    px, py = _xy(p)
    qx, qy = _xy(q)
    if (px, py) == (qx, qy):
        raise DomainError("segment endpoints coincide")
    return math.gcd(abs(qx - px), abs(qy - py)) - 1


def as_int_array(points) -> np.ndarray:
    """Coerce a point list / array to an (k, 2) int64 array, range-checked."""
    if isinstance(points, np.ndarray) and points.dtype != object:
        arr = points
    else:
        rows = [_xy(p) for p in points]
        for x, y in rows:
            check_int64(x, "coordinate")
            check_int64(y, "coordinate")
        arr = np.array(rows, dtype=np.int64).reshape(-1, 2)
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise DomainError(f"expected an array of shape (k, 2), got {arr.shape}")
    if not np.issubdtype(arr.dtype, np.integer):
        raise TypeError(f"lattice arrays must be integer typed, got {arr.dtype}")
    return arr.astype(np.int64, copy=False)


def cross_rows(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise a.x*b.y - a.y*b.x, exact.

    Falls back to Python ints (object dtype) when the int64 products could
    overflow.
    """
    big = max(int(np.abs(a).max(initial=0)), int(np.abs(b).max(initial=0)))
    if big >= 2**31:
        a = a.astype(object)
        b = b.astype(object)
    return a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0]


def turn3_rows(p: np.ndarray, q: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Vectorised turn3 over broadcastable (.., 2) arrays, exact."""
    big = max(int(np.abs(np.asarray(x)).max(initial=0)) for x in (p, q, r))
    if big > SAFE_CROSS_COORD:
        p, q, r = (np.asarray(x).astype(object) for x in (p, q, r))
    return cross_rows(q - p, r - p)
