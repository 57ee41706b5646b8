import math

import numpy as np
import pytest

from doublecircle.constructions import (
    build_double_circle,
    double_circle_edges,
    jarnik_counts,
    jarnik_polygon,
    jarnik_vectors,
    naive_symmetric,
    naive_vectors,
    quadratic_baseline,
    translate_to_grid,
)
from doublecircle.lattice import DomainError
from doublecircle.sequences import PointSet, Role, visible_vectors
from doublecircle.verification import convex_hull, grid_size, label_roles


def test_double_circle_n3_trace():
    # V = (1,0),(1,1),(0,1),(-1,0),(-1,-1),(0,-1); alt pairs (a, b):
    # ((1,1),(1,0)), ((-1,0),(0,1)), ((0,-1),(-1,-1)); edges 2a+b, a+2b:
    edges = [(3, 2), (3, 1), (-2, 1), (-1, 2), (-1, -3), (-2, -3)]
    assert double_circle_edges(3).tolist() == edges
    pts, acc = [], (0, 0)
    for e in edges:
        acc = (acc[0] + e[0], acc[1] + e[1])
        pts.append(acc)
    assert pts == [(3, 2), (6, 3), (4, 4), (3, 6), (2, 3), (0, 0)]
    P = build_double_circle(3, translate=False)
    assert P.tolist() == pts
    assert build_double_circle(3).tolist() == pts
    assert sorted(convex_hull(P).tolist()) == [(0, 0), (3, 6), (6, 3)]
    assert grid_size(P) == 6


@pytest.mark.parametrize("n", [3, 4, 5, 6, 17, 100, 1000])
def test_double_circle_roles_alternate(n):
    P = label_roles(build_double_circle(n))
    roles = P.roles()
    assert roles[0::2] == [Role.INNER] * n
    assert roles[1::2] == [Role.HULL] * n


@pytest.mark.parametrize("n", [3, 4, 9, 250, 4096])
def test_double_circle_edges_close_up(n):
    W = double_circle_edges(n).vectors
    assert W.sum(axis=0).tolist() == [0, 0]
    V = visible_vectors(n).vectors.reshape(-1, 2, 2)
    # each pair of edge vectors sums to 3 (a + b)
    assert np.array_equal(W.reshape(-1, 2, 2).sum(axis=1), 3 * V.sum(axis=1))


def test_double_circle_in_grid():
    P = build_double_circle(200)
    assert P.points.min(axis=0).tolist() == [0, 0]
    assert P.points.max() == grid_size(P)


def test_double_circle_rejects_small_n():
    with pytest.raises(DomainError):
        build_double_circle(2)


def test_translate_to_grid():
    assert translate_to_grid(PointSet.of([(2, 3), (5, 7)])).tolist() == [(0, 0), (3, 4)]
    P = PointSet.of([(0, 4), (3, 0)], labels=[Role.HULL, Role.INNER])
    Q = translate_to_grid(P)
    assert Q == P and Q.roles() == P.roles()
    R = PointSet.of([(-5, 9), (1, 2), (4, 4)])
    assert grid_size(translate_to_grid(R)) == grid_size(R)
    with pytest.raises(DomainError):
        translate_to_grid(PointSet.of([]))


def _jarnik_enumerated(Q):
    return [(i, j) for i in range(-Q, Q + 1) for j in range(-Q, Q + 1) if math.gcd(i, j) == 1]


@pytest.mark.parametrize("Q", range(1, 41))
def test_jarnik_polygon_against_enumeration(Q):
    vecs = _jarnik_enumerated(Q)
    P = jarnik_polygon(Q, translate=False)
    s = jarnik_counts(Q)
    assert len(P) == len(vecs) == s.vertex_count
    assert s.vertex_count % 8 == 0
    assert P.tolist()[-1] == (0, 0)
    # convex position: every consecutive triple turns left
    pts = P.points
    a, b, c = pts, np.roll(pts, -1, axis=0), np.roll(pts, -2, axis=0)
    d1, d2 = b - a, c - b
    assert np.all(d1[:, 0] * d2[:, 1] - d1[:, 1] * d2[:, 0] > 0)
    # both extents equal the exact sum 1 + 2 * sum of i over coprime pairs
    ext = pts.max(axis=0) - pts.min(axis=0)
    exact = 1 + 2 * sum(i for i in range(1, Q + 1) for j in range(1, Q + 1) if math.gcd(i, j) == 1)
    assert ext.tolist() == [exact, exact] == [s.size_S, s.size_S]


@pytest.mark.parametrize("Q", [60, 100])
def test_jarnik_size_matches_sum(Q):
    P = jarnik_polygon(Q)
    assert grid_size(P) == jarnik_counts(Q).size_S


def test_jarnik_small_examples():
    assert len(jarnik_polygon(1)) == 8
    assert len(jarnik_polygon(2)) == 16
    s1, s2 = jarnik_counts(1), jarnik_counts(2)
    assert (s1.vertex_count, s1.size_S) == (8, 3)
    assert (s2.vertex_count, s2.size_S) == (16, 9)
    assert jarnik_vectors(1).tolist() == [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    with pytest.raises(DomainError):
        jarnik_polygon(0)
    with pytest.raises(DomainError):
        jarnik_counts(0)


def test_jarnik_asymptotic_ratios():
    s = jarnik_counts(1000)
    assert 0.95 <= s.count_ratio <= 1.05
    assert 0.95 <= s.size_ratio <= 1.05


def test_quadratic_baseline_n3():
    P = quadratic_baseline(3)
    assert P.tolist() == [(1, 2), (2, 8), (3, 12), (4, 22), (5, 30), (3, 15)]
    assert grid_size(P) == 28 == 4 * 9 - 2 * 3 - 2


@pytest.mark.parametrize("n", [3, 4, 7, 50, 1234])
def test_quadratic_baseline_formulas(n):
    f = lambda x: x * x + x
    P = quadratic_baseline(n).tolist()
    assert f(1) == 2 and f(2 * n - 1) == 4 * n * n - 2 * n
    assert P[-1] == (n, 2 * n * n - n) == (n, (f(2 * n - 1) + f(1)) // 2 - 1)
    assert grid_size(quadratic_baseline(n)) == 4 * n * n - 2 * n - 2


def test_quadratic_baseline_n3_is_degenerate():
    # the final point is the midpoint of (2, f(2)+2) and (4, f(4)+2)
    a, b, last = (2, 8), (4, 22), (3, 15)
    assert ((a[0] + b[0]) // 2, (a[1] + b[1]) // 2) == last
    P = quadratic_baseline(3).tolist()
    assert a in P and b in P and last in P


def test_naive_n4_by_prefix_sums():
    V = naive_vectors(4).tolist()
    assert V[4:] == [(-x, -y) for x, y in V[:4]]
    altv = [V[1], V[0], V[3], V[2], V[5], V[4], V[7], V[6]]
    acc, pts = (0, 0), []
    for v in altv:
        acc = (acc[0] + v[0], acc[1] + v[1])
        pts.append(acc)
    assert naive_symmetric(4).tolist() == pts
    assert pts == [(1, 2), (2, 3), (3, 7), (4, 10), (3, 8), (2, 7), (1, 3), (0, 0)]


@pytest.mark.parametrize("n", range(4, 66, 2))
def test_naive_y_extent(n):
    P = naive_symmetric(n).points
    assert int(P[:, 1].max() - P[:, 1].min()) == n * (n + 1) // 2


def test_naive_domain():
    for n in (3, 5, 2):
        with pytest.raises(DomainError):
            naive_symmetric(n)


def test_size_ratio_band():
    ratios = [grid_size(build_double_circle(2**e)) / 2 ** (1.5 * e) for e in range(4, 21, 2)]
    assert all(0.1 <= r <= 10 for r in ratios)
    assert max(ratios) / min(ratios) < 2
