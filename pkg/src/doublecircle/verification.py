"""Exact checkers for double circles and the lattice facts the construction
relies on (consecutive-area 1/2, the four-vector window signs, Pick counts).

Every predicate is an integer sign test; nothing here uses floating point
for a decision. Floats appear only to propose an ordering that is then
certified exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .lattice import (
    ORIGIN,
    DomainError,
    Vec,
    as_int_array,
    cross_rows,
    segment_lattice_points,
    turn2,
    turn3,
    turn3_rows,
)
from .sequences import PointSet, Role, VectorSequence

HULL_COUNT = "hull-count"
GENERAL_POSITION = "general-position"
COND2 = "cond-2-proximity"
COND3 = "cond-3-separation"
COND4 = "cond-4-separation"


class DegenerateError(DomainError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    failed_condition: Optional[str] = None
    witness: Optional[Tuple[int, ...]] = None
    detail: str = ""

    def __post_init__(self):
        if self.passed != (self.failed_condition is None):
            raise ValueError("passed must hold exactly when no condition failed")

    def __bool__(self) -> bool:
        return self.passed


def _fail(tag, witness=None, detail=""):
    return VerificationReport(False, tag, None if witness is None else tuple(int(w) for w in witness), detail)


def _points(P) -> np.ndarray:
    return P.points if isinstance(P, PointSet) else as_int_array(P)


def grid_size(P) -> int:
    pts = _points(P)
    if len(pts) == 0:
        raise DomainError("grid size of an empty set")
    ext = pts.max(axis=0) - pts.min(axis=0)
    return int(ext.max())


# ---------------------------------------------------------------- hull


def hull_indices(pts: np.ndarray) -> List[int]:
    """Monotone chain; strictly convex hull, counterclockwise, starting at the
    lexicographically smallest point."""
    xy = pts.tolist()
    order = sorted(range(len(xy)), key=xy.__getitem__)

    def chain(seq):
        out: List[int] = []
        for k in seq:
            kx, ky = xy[k]
            while len(out) >= 2:
                ax, ay = xy[out[-2]]
                bx, by = xy[out[-1]]
                if (bx - ax) * (ky - ay) - (by - ay) * (kx - ax) > 0:
                    break
                out.pop()
            out.append(k)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 3:
        raise DegenerateError("all points are collinear")
    return hull


def convex_hull(P) -> PointSet:
    pts = _points(P)
    if len(pts) < 3:
        raise DomainError("convex hull needs at least 3 points")
    h = hull_indices(pts)
    return PointSet(pts[h], np.full(len(h), Role.HULL))


def label_roles(P: PointSet) -> PointSet:
    """Attach hull / inner labels computed from the convex hull."""
    labels = np.full(len(P), Role.INNER, dtype=np.int8)
    labels[hull_indices(P.points)] = Role.HULL
    return P.with_labels(labels)


# ---------------------------------------------------------- general position


def _duplicate(pts: np.ndarray) -> Optional[Tuple[int, int]]:
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    s = pts[order]
    same = np.flatnonzero(np.all(s[1:] == s[:-1], axis=1))
    if len(same):
        k = same[0]
        return int(order[k]), int(order[k + 1])
    return None


def collinear_triple_exhaustive(pts: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """Exact O(N^2 log N) search: a < b < c are collinear iff the reduced
    directions a->b and a->c coincide."""
    N = len(pts)
    a, b = np.triu_indices(N, k=1)
    d = pts[b] - pts[a]
    g = np.gcd(d[:, 0], d[:, 1])
    d = d // g[:, None]
    flip = (d[:, 0] < 0) | ((d[:, 0] == 0) & (d[:, 1] < 0))
    d[flip] = -d[flip]
    order = np.lexsort((d[:, 1], d[:, 0], a))
    a, b, d = a[order], b[order], d[order]
    same = np.flatnonzero((a[1:] == a[:-1]) & np.all(d[1:] == d[:-1], axis=1))
    if len(same):
        k = same[0]
        return int(a[k]), int(b[k]), int(b[k + 1])
    return None


def collinear_triple_sampled(pts: np.ndarray, samples: int, seed: int = 0) -> Optional[Tuple[int, int, int]]:
    N = len(pts)
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, N, size=(samples, 3))
    idx = idx[(idx[:, 0] != idx[:, 1]) & (idx[:, 1] != idx[:, 2]) & (idx[:, 0] != idx[:, 2])]
    t = turn3_rows(pts[idx[:, 0]], pts[idx[:, 1]], pts[idx[:, 2]])
    zero = np.flatnonzero(t == 0)
    if len(zero):
        return tuple(int(k) for k in idx[zero[0]])
    return None


# ------------------------------------------------------------ double circle


def _sign(a) -> np.ndarray:
    """Sign of an int64 or object (Python int) array as int64."""
    a = np.asarray(a)
    return (a > 0).astype(np.int64) - (a < 0).astype(np.int64)


def _angular_order(pts3: np.ndarray, c3: np.ndarray) -> Optional[np.ndarray]:
    """A cyclic order of the points that is certified to be strictly sorted
    counterclockwise around c, or None."""

    def certified(order):
        d = pts3[order] - c3
        if np.any(np.all(d == 0, axis=1)):
            return False
        if not np.all(cross_rows(d, np.roll(d, -1, axis=0)) > 0):
            return False
        # every step turns by less than pi, so the order is sorted iff the
        # sequence wraps past direction (1, 0) exactly once
        half = ~((d[:, 1] > 0) | ((d[:, 1] == 0) & (d[:, 0] > 0)))
        return int(np.count_nonzero(half & ~np.roll(half, -1))) == 1

    identity = np.arange(len(pts3))
    if certified(identity):
        return identity
    d = (pts3 - c3).astype(np.float64)
    guess = np.argsort(np.arctan2(d[:, 1], d[:, 0]), kind="stable")
    if certified(guess):
        return guess
    return None


def _assign_extreme(pts: np.ndarray, hull: List[int], inner: np.ndarray) -> np.ndarray:
    """For each hull edge (p_i, p_{i+1}) the inner point seen first when the
    ray p_i -> p_{i+1} rotates into the polygon. A double circle forces this
    point to be p'_i."""
    xy = pts.tolist()
    n = len(hull)
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        px, py = xy[hull[i]]
        rx, ry = xy[hull[(i + 1) % n]]
        ex, ey = rx - px, ry - py
        best, bdot, bcr = -1, 0, 1
        for k in inner.tolist():
            dx, dy = xy[k][0] - px, xy[k][1] - py
            cr = ex * dy - ey * dx
            dot = ex * dx + ey * dy
            # smaller angle in (0, pi) <=> larger dot/cr
            if best < 0 or dot * bcr > bdot * cr:
                best, bdot, bcr = k, dot, cr
        out[i] = best
    return out


def _edge_failure(pts, p, q, r, exclude) -> Optional[int]:
    """Index of a point violating 'line(p, q) separates r from the rest', or
    r itself if r lies on the line; None when the separation holds."""
    P, Q, R = pts[p], pts[q], pts[r]
    s = int(np.sign(turn3(P, Q, R)))
    if s == 0:
        return r
    f = _sign(turn3_rows(P, Q, pts))
    f[list(exclude)] = -s
    bad = np.flatnonzero(f != -s)
    return int(bad[0]) if len(bad) else None


def _conditions_bruteforce(pts, hull, assign) -> Optional[VerificationReport]:
    n = len(hull)
    for i in range(n):
        p, q, r = hull[i], int(assign[i]), hull[(i + 1) % n]
        bad = _edge_failure(pts, p, q, r, (p, q, r))
        if bad is not None:
            return _fail(COND3, (i, bad), f"line through hull vertex {p} and inner point {q} does not separate {r}")
        bad = _edge_failure(pts, q, r, p, (p, q, r))
        if bad is not None:
            return _fail(COND4, (i, bad), f"line through inner point {q} and hull vertex {r} does not separate {p}")
    return None


def _conditions_fast(pts, hull, assign, inner, gap, c3) -> Optional[VerificationReport]:
    """Conditions (3) and (4) in O(n) sign tests.

    For the line through p_i and p'_i: hull vertices on p_{i+1}'s closed side
    form a contiguous arc, so checking p_{i-1} and p_{i+2} settles all hull
    vertices. The part of the hull on that side then lies inside the triangle
    p_i p_{i+1} p_{i+2}, hence inside the wedge at c spanned by p_i and p_{i+2}
    whenever that wedge is convex; only inner points in the two gaps of that
    wedge can violate the condition. The line through p'_i and p_{i+1} is the
    mirror case. Edges whose wedge is not convex are checked by brute force.
    """
    n = len(hull)
    h = np.asarray(hull)
    H = pts[h]
    A = pts[assign]
    nxt = np.roll(np.arange(n), -1)
    nxt2 = np.roll(np.arange(n), -2)
    prv = np.roll(np.arange(n), 1)

    s3 = _sign(turn3_rows(H, A, H[nxt]))
    s4 = _sign(turn3_rows(A, H[nxt], H))
    ok3 = (s3 != 0)
    ok3 &= _sign(turn3_rows(H, A, H[prv])) == -s3
    ok3 &= _sign(turn3_rows(H, A, H[nxt2])) == -s3
    ok4 = (s4 != 0)
    ok4 &= _sign(turn3_rows(A, H[nxt], H[prv])) == -s4
    ok4 &= _sign(turn3_rows(A, H[nxt], H[nxt2])) == -s4

    H3 = 3 * H
    convex3 = turn3_rows(c3, H3, H3[nxt2]) > 0
    convex4 = turn3_rows(c3, H3[prv], H3[nxt]) > 0

    X = pts[inner]
    for off in (0, -1):
        e = (gap + off) % n
        f = _sign(turn3_rows(H[e], A[e], X))
        bad = (inner != assign[e]) & (f != -s3[e])
        ok3[e[bad]] = False
    for off in (0, 1):
        e = (gap + off) % n
        f = _sign(turn3_rows(A[e], H[nxt][e], X))
        bad = (inner != assign[e]) & (f != -s4[e])
        ok4[e[bad]] = False

    for i in range(n):
        p, q, r = hull[i], int(assign[i]), hull[(i + 1) % n]
        if not (ok3[i] and convex3[i]):
            bad = _edge_failure(pts, p, q, r, (p, q, r))
            if bad is not None:
                return _fail(COND3, (i, bad), f"line through hull vertex {p} and inner point {q} does not separate {r}")
        if not (ok4[i] and convex4[i]):
            bad = _edge_failure(pts, q, r, p, (p, q, r))
            if bad is not None:
                return _fail(COND4, (i, bad), f"line through inner point {q} and hull vertex {r} does not separate {p}")
    return None


def is_double_circle(P, exhaustive_limit: int = 200, samples: int = 10**5, seed: int = 0) -> VerificationReport:
    """Decide whether the 2n points form a double circle.

    Checks, in order: general position (exhaustive for n <= exhaustive_limit,
    otherwise `samples` random triples), exactly n hull vertices, a matching
    of inner points to distinct hull edges, and the two separation
    conditions for every edge. Closeness to the edge is not tested on its
    own; the separation conditions subsume it.
    """
    pts = _points(P)
    N = len(pts)
    if N % 2:
        raise DomainError(f"a double circle has an even number of points, got {N}")
    if N < 6:
        raise DomainError(f"need at least 6 points, got {N}")
    n = N // 2

    dup = _duplicate(pts)
    if dup is not None:
        return _fail(GENERAL_POSITION, dup, "duplicate point")
    if n <= exhaustive_limit:
        trip = collinear_triple_exhaustive(pts)
    else:
        trip = collinear_triple_sampled(pts, samples, seed)
    if trip is not None:
        return _fail(GENERAL_POSITION, trip, "three collinear points")

    hull = hull_indices(pts)
    if len(hull) != n:
        return _fail(HULL_COUNT, None, f"{len(hull)} hull vertices, expected {n}")
    is_hull = np.zeros(N, dtype=bool)
    is_hull[hull] = True
    inner = np.flatnonzero(~is_hull)

    c3 = pts[hull[0]] + pts[hull[n // 3]] + pts[hull[(2 * n) // 3]]
    order = _angular_order(3 * pts, c3)

    assign = gap = None
    if order is not None:
        start = int(np.flatnonzero(order == hull[0])[0])
        order = np.roll(order, -start)
        hull_in_order = order[is_hull[order]]
        if np.array_equal(hull_in_order, hull):
            gap_of = np.cumsum(is_hull[order]) - 1
            gap = np.empty(N, dtype=np.int64)
            gap[order] = gap_of
            gap = gap[inner]
            if np.array_equal(np.sort(gap), np.arange(n)):
                assign = np.empty(n, dtype=np.int64)
                assign[gap] = inner
    if assign is not None:
        bad = _conditions_fast(pts, hull, assign, inner, gap, c3)
        if bad is None:
            return VerificationReport(True)

    # the inner point adjacent to edge i is forced; recompute it canonically
    assign = _assign_extreme(pts, hull, inner)
    if len(set(assign.tolist())) != n:
        counts = np.bincount(assign, minlength=N)
        twice = int(np.flatnonzero(counts > 1)[0])
        return _fail(COND2, (twice,), f"inner point {twice} is the nearest candidate for two hull edges")
    bad = _conditions_bruteforce(pts, hull, assign)
    return bad if bad is not None else VerificationReport(True)


def is_double_circle_bruteforce(P) -> VerificationReport:
    """Reference checker: cubic general-position test and every point against
    every separating line. Slow; meant as an oracle for small inputs."""
    pts = _points(P)
    N = len(pts)
    if N % 2 or N < 6:
        raise DomainError(f"need an even number >= 6 of points, got {N}")
    n = N // 2
    xy = pts.tolist()
    for a in range(N):
        for b in range(a + 1, N):
            if xy[a] == xy[b]:
                return _fail(GENERAL_POSITION, (a, b), "duplicate point")
            for c in range(b + 1, N):
                if turn3(xy[a], xy[b], xy[c]) == 0:
                    return _fail(GENERAL_POSITION, (a, b, c), "three collinear points")
    hull = hull_indices(pts)
    if len(hull) != n:
        return _fail(HULL_COUNT, None, f"{len(hull)} hull vertices, expected {n}")
    inner = np.array(sorted(set(range(N)) - set(hull)), dtype=np.int64)
    assign = _assign_extreme(pts, hull, inner)
    if len(set(assign.tolist())) != n:
        return _fail(COND2, None, "inner points cannot be matched to distinct edges")
    bad = _conditions_bruteforce(pts, hull, assign)
    return bad if bad is not None else VerificationReport(True)


# -------------------------------------------------------------------- Pick


@dataclass(frozen=True)
class PickCounts:
    interior: int
    boundary: int
    doubled_area: int

    def identity_holds(self) -> bool:
        return self.doubled_area == 2 * self.interior + self.boundary - 2


def pick_counts(p: Vec, q: Vec, r: Vec) -> PickCounts:
    """Boundary points from the three edge gcds, interior points from Pick."""
    doubled = abs(turn3(p, q, r))
    if doubled == 0:
        raise DomainError("degenerate triangle")
    b = 3 + segment_lattice_points(p, q) + segment_lattice_points(q, r) + segment_lattice_points(r, p)
    return PickCounts((doubled - b + 2) // 2, b, doubled)


def pick_counts_enumerate(p: Vec, q: Vec, r: Vec) -> PickCounts:
    """Count lattice points by scanning the bounding box."""
    tri = as_int_array([p, q, r])
    s = int(np.sign(turn3(*tri.tolist())))
    if s == 0:
        raise DomainError("degenerate triangle")
    lo, hi = tri.min(axis=0), tri.max(axis=0)
    gx, gy = np.meshgrid(np.arange(lo[0], hi[0] + 1), np.arange(lo[1], hi[1] + 1), indexing="ij")
    X = np.stack([gx.ravel(), gy.ravel()], axis=1)
    t = np.stack([s * turn3_rows(tri[k], tri[(k + 1) % 3], X) for k in range(3)])
    inside = np.all(t > 0, axis=0)
    closed = np.all(t >= 0, axis=0)
    interior = int(inside.sum())
    boundary = int(closed.sum()) - interior
    return PickCounts(interior, boundary, abs(turn3(*tri.tolist())))


# ------------------------------------------------- construction properties


def consecutive_turns(V: VectorSequence) -> np.ndarray:
    """turn2(v_k, v_{k+1}) for every cyclically consecutive pair."""
    v = V.vectors
    return cross_rows(v, np.roll(v, -1, axis=0))


def check_lemma4(a1: Vec, a2: Vec, a3: Vec, a4: Vec) -> bool:
    """Turn signs of the points q1..q4 (scaled by 3) built from two
    consecutive alt-pairs (a1, a2), (a3, a4) with lambda = 1/3.

    q2 must be right of line(o, q1), q3 and q4 left of it, and both q1 and o
    right of line(q4, q3).
    """
    a1, a2, a3, a4 = (tuple(int(c) for c in a) for a in (a1, a2, a3, a4))

    def comb(u, v):
        return (2 * u[0] + v[0], 2 * u[1] + v[1])

    def add(u, v):
        return (u[0] + v[0], u[1] + v[1])

    q1 = comb(a2, a1)
    q2 = add(q1, comb(a1, a2))
    q3 = add(q2, comb(a4, a3))
    q4 = add(q3, comb(a3, a4))
    return (
        turn2(q1, q2) < 0
        and turn2(q1, q3) > 0
        and turn2(q1, q4) > 0
        and turn3(q4, q3, q1) < 0
        and turn3(q4, q3, ORIGIN) < 0
    )


def lemma4_windows(V: VectorSequence) -> List[Tuple[tuple, tuple, tuple, tuple]]:
    """Every window of two consecutive alt-pairs of a sorted sequence."""
    v = V.tolist()
    k = len(v)
    if k % 2:
        raise DomainError("sequence length must be even")
    return [(v[i], v[i + 1], v[(i + 2) % k], v[(i + 3) % k]) for i in range(0, k, 2)]


def lemma4_all(V: VectorSequence) -> np.ndarray:
    """Vectorised check_lemma4 over every window; one bool per pair."""
    v = V.vectors
    if len(v) % 2:
        raise DomainError("sequence length must be even")
    a1, a2 = v[0::2], v[1::2]
    a3, a4 = np.roll(a1, -1, axis=0), np.roll(a2, -1, axis=0)
    q1 = 2 * a2 + a1
    q2 = q1 + 2 * a1 + a2
    q3 = q2 + 2 * a4 + a3
    q4 = q3 + 2 * a3 + a4
    o = np.zeros_like(q1)
    return (
        (cross_rows(q1, q2) < 0)
        & (cross_rows(q1, q3) > 0)
        & (cross_rows(q1, q4) > 0)
        & (turn3_rows(q4, q3, q1) < 0)
        & (turn3_rows(q4, q3, o) < 0)
    )
