import math
import statistics
import time

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from doublecircle.lattice import DomainError, InvariantError, LatticeOverflowError, build_gcd_table
from doublecircle.sequences import (
    L1Shell,
    VectorSequence,
    accumulate,
    alt,
    bucket_index,
    generate_visible,
    radial_sort_bucket,
    radial_sort_compare,
    scale,
    visible_vectors,
)
from doublecircle.sequences import DuplicateDirectionError
from doublecircle.verification import consecutive_turns

TABLE = build_gcd_table(200)


def trace_algorithm(n):
    """Literal transcription of the generation loop, pair by pair."""
    V = [(1, 0), (-1, 0), (0, 1), (0, -1)]
    k = 1
    while len(V) < 2 * n:
        k += 1
        for i in range(1, k):
            j = k - i
            if math.gcd(i, j) == 1:
                if len(V) < 2 * n:
                    V += [(i, j), (-i, -j)]
                if len(V) < 2 * n:
                    V += [(-i, j), (i, -j)]
    return V


def angle_sorted(vs):
    # float angles are safe here: directions are distinct and tiny
    return sorted(vs, key=lambda v: math.atan2(v[1], v[0]) % (2 * math.pi))


def test_visible_vectors_small_examples():
    assert visible_vectors(3).tolist() == [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    assert visible_vectors(4).tolist() == [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    v5 = visible_vectors(5)
    assert set(v5.tolist()) == set(visible_vectors(4).tolist()) | {(1, 2), (-1, -2)}
    assert v5.tolist() == angle_sorted(v5.tolist())
    assert all(v5[i + 5] == -v5[i] for i in range(5))


@pytest.mark.parametrize("n", list(range(3, 80)) + [137, 500, 1001])
def test_generation_order_matches_transcription(n):
    assert generate_visible(n, TABLE).tolist() == [list(v) for v in trace_algorithm(n)]


def test_generation_is_prefix_stable():
    big = generate_visible(3000)
    for n in range(3, 3000, 97):
        assert np.array_equal(generate_visible(n, TABLE), big[: 2 * n])


def test_n_below_three_rejected():
    with pytest.raises(DomainError):
        visible_vectors(2)


def test_small_table_is_grown():
    t = build_gcd_table(2)
    assert np.array_equal(generate_visible(400, t), generate_visible(400))


def _ball_visible(k):
    return {(i, j) for i in range(-k, k + 1) for j in range(-k, k + 1)
            if abs(i) + abs(j) <= k and (i, j) != (0, 0) and math.gcd(i, j) == 1}


@pytest.mark.parametrize("n", list(range(3, 300)) + list(range(300, 10**4, 331)) + [10**4])
def test_visible_vectors_invariants(n):
    V = visible_vectors(n)
    vs = V.tolist()
    assert len(vs) == 2 * n and len(set(vs)) == 2 * n
    assert all(math.gcd(x, y) == 1 for x, y in vs)
    assert V.sorted_ccw and V.is_symmetric()
    k = max(abs(x) + abs(y) for x, y in vs)
    assert _ball_visible(k - 1) <= set(vs)
    assert np.all(np.abs(consecutive_turns(V)) == 1)


def test_l1_shell_order():
    assert L1Shell(3).visible(TABLE).tolist() == [[1, 2], [-1, -2], [-1, 2], [1, -2], [2, 1], [-2, -1], [-2, 1], [2, -1]]
    assert L1Shell(4).visible(TABLE).tolist() == [[1, 3], [-1, -3], [-1, 3], [1, -3], [3, 1], [-3, -1], [-3, 1], [3, -1]]
    with pytest.raises(DomainError):
        L1Shell(0)


def test_bucket_index_examples():
    assert bucket_index(1, 2, 3) == math.ceil(1 * 9 / 3) == 3
    assert bucket_index(2, 1, 3) == math.ceil(2 * 9 / 3) == 6


def test_bucket_index_is_smallest_nonpositive_turn():
    # t is the first fan point b_t = (t/m, m - t/m) with turn(o, a, b_t) <= 0,
    # i.e. i*(m^2 - t) - j*t <= 0 after scaling by m
    for m in range(2, 12):
        for i in range(1, m):
            for j in range(1, m - i):
                t = bucket_index(i, j, m)
                assert i * (m * m - t) - j * t <= 0
                assert i * (m * m - (t - 1)) - j * (t - 1) > 0


def test_compare_sort_examples():
    assert radial_sort_compare(VectorSequence.of([(0, 1), (1, 0)])).tolist() == [(1, 0), (0, 1)]
    assert radial_sort_compare(VectorSequence.of([(-1, -1), (1, 1)])).tolist() == [(1, 1), (-1, -1)]
    v5 = VectorSequence(generate_visible(5))
    assert radial_sort_compare(v5) == visible_vectors(5)
    with pytest.raises(DuplicateDirectionError):
        radial_sort_compare(VectorSequence.of([(1, 1), (2, 2)]))


visible_small = st.tuples(st.integers(-40, 40), st.integers(-40, 40)).filter(
    lambda v: v != (0, 0) and math.gcd(*v) == 1
)


@settings(max_examples=300)
@given(st.lists(visible_small, min_size=1, max_size=200, unique=True))
def test_bucket_sort_agrees_with_comparator(vs):
    V = VectorSequence.of(vs)
    assert radial_sort_bucket(V) == radial_sort_compare(V)


@pytest.mark.parametrize("n", [3, 10, 257, 4000, 10**4])
def test_bucket_sort_agrees_on_generated_sets(n):
    V = VectorSequence(generate_visible(n))
    assert radial_sort_bucket(V) == radial_sort_compare(V)


def test_bucket_collision_detected():
    with pytest.raises(InvariantError):
        radial_sort_bucket(VectorSequence.of([(1, 1), (2, 2)]))
    with pytest.raises(InvariantError):
        radial_sort_bucket(VectorSequence.of([(2, 0), (0, 1)]))
    with pytest.raises(InvariantError):
        radial_sort_bucket(VectorSequence.of([(1, 0), (1, 0)]))


def test_alt_examples():
    a, b, c, d = (1, 0), (2, 1), (3, 5), (0, 1)
    assert alt(VectorSequence.of([a, b, c, d])).tolist() == [b, a, d, c]
    assert len(alt(VectorSequence.of([]))) == 0
    with pytest.raises(DomainError):
        alt(VectorSequence.of([a, b, c]))


@given(st.lists(st.tuples(st.integers(-99, 99), st.integers(-99, 99)), max_size=40).filter(lambda l: len(l) % 2 == 0))
def test_alt_is_involution(vs):
    V = VectorSequence.of(vs)
    assert alt(alt(V)) == V


def test_scale():
    assert scale(3, VectorSequence.of([(1, 0)])).tolist() == [(3, 0)]
    V = visible_vectors(20)
    assert scale(1, V) == V
    neg = scale(-1, V)
    assert neg.tolist() == [(-x, -y) for x, y in V.tolist()]
    assert neg.is_symmetric()
    with pytest.raises(DomainError):
        scale(0, V)
    with pytest.raises(LatticeOverflowError):
        scale(2**62, VectorSequence.of([(4, 0)]))


def test_accumulate():
    assert accumulate(VectorSequence.of([(1, 0), (0, 1)])).tolist() == [(1, 0), (1, 1)]
    P = accumulate(visible_vectors(50))
    assert P.tolist()[-1] == (0, 0)
    assert len(P) == 100
    with pytest.raises(DomainError):
        accumulate(VectorSequence.of([]))
    with pytest.raises(LatticeOverflowError):
        accumulate(VectorSequence.of([(2**62, 0), (2**62, 0)]))


@pytest.mark.slow
def test_visible_vectors_linear_time():
    ratios = []
    prev = None
    for e in range(16, 20):
        n = 2**e
        times = []
        for _ in range(5):
            t0 = time.perf_counter()
            visible_vectors(n)
            times.append(time.perf_counter() - t0)
        med = statistics.median(times)
        if prev is not None:
            ratios.append(med / prev)
        prev = med
    assert max(ratios) <= 3, ratios
