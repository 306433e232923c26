import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetamoments.spacing import (SPACING_COLUMNS, QuadCountQuery, TieLog, TripleCountQuery,
                                 count_quads_bruteforce, count_quads_fast, count_triples_bruteforce,
                                 count_triples_fast, exact_coincidences, exact_sign, kth_power_free,
                                 min_nonzero_gap, quad_bound, triple_bound, verify_bound_shapes)


def _triples_by_definition(q):
    """Plain float enumeration for well-separated deltas (no ties near the threshold)."""
    b = q.delta * math.sqrt(q.M)
    c = 0
    for m in range(q.M + 1, 2 * q.M + 1):
        for n in range(q.Mprime + 1, 2 * q.Mprime + 1):
            s = math.sqrt(m) + math.sqrt(n)
            for k in range(max(1, math.floor((s - b) ** 2) - 2) if s > b else 1, math.ceil((s + b) ** 2) + 3):
                c += abs(s - math.sqrt(k)) <= b
    return c


def test_triple_examples():
    q = TripleCountQuery(4, 1, 0.0)
    assert count_triples_bruteforce(q) >= 1 and count_triples_fast(q) >= 1
    assert count_triples_fast(TripleCountQuery(1, 1, 0.0)) == 1 == count_triples_bruteforce(TripleCountQuery(1, 1, 0.0))


def test_triple_validation():
    with pytest.raises(ValueError, match="M' <= M"):
        TripleCountQuery(3, 4, 0.1)
    with pytest.raises(ValueError):
        TripleCountQuery(3, 1, -0.1)
    with pytest.raises(ValueError, match="work"):
        count_triples_bruteforce(TripleCountQuery(3000, 2000, 0.1))


def test_triple_saturation():
    q = TripleCountQuery(5, 3, 100.0)
    b = q.delta * math.sqrt(q.M)
    expected = sum(math.floor((math.sqrt(m) + math.sqrt(n) + b) ** 2)
                   for m in range(6, 11) for n in range(4, 7))
    assert count_triples_fast(q) == expected == count_triples_bruteforce(q)


def test_triple_delta_zero_is_perfect_square_count():
    q = TripleCountQuery(30, 20, 0.0)
    expected = sum(math.isqrt(m * n) ** 2 == m * n for m in range(31, 61) for n in range(21, 41))
    assert count_triples_fast(q) == expected == count_triples_bruteforce(q)


@given(st.integers(1, 40), st.integers(1, 40), st.floats(1e-4, 0.3))
def test_triple_fast_matches_definition(M, Mp, delta):
    M, Mp = max(M, Mp), min(M, Mp)
    q = TripleCountQuery(M, Mp, delta)
    assert count_triples_fast(q) == count_triples_bruteforce(q) == _triples_by_definition(q)


@given(st.integers(1, 60), st.integers(1, 60), st.sampled_from([0.0, 1e-15, 1e-12, 1e-9, 1e-6, 1e-3, 0.05]))
def test_triple_fast_matches_bruteforce_small_deltas(M, Mp, delta):
    M, Mp = max(M, Mp), min(M, Mp)
    q = TripleCountQuery(M, Mp, delta)
    assert count_triples_fast(q) == count_triples_bruteforce(q)


def test_triple_exact_ties_resolved():
    # delta sqrt M = 1 puts many k exactly on the window edge: sqrt(k) = sqrt(m) + sqrt(n) -+ 1
    q = TripleCountQuery(9, 9, 1 / 3)
    ties = TieLog()
    assert count_triples_fast(q, ties) == count_triples_bruteforce(q)
    assert ties.resolved > 0 and ties.unresolved == 0


@given(st.integers(1, 30), st.integers(1, 30), st.floats(0, 0.2), st.floats(0, 0.2))
def test_triple_monotone_in_delta(M, Mp, d1, d2):
    M, Mp = max(M, Mp), min(M, Mp)
    lo, hi = sorted((d1, d2))
    assert count_triples_fast(TripleCountQuery(M, Mp, lo)) <= count_triples_fast(TripleCountQuery(M, Mp, hi))


def _quads_by_definition(q):
    r = [n ** (1 / q.k) for n in range(q.N + 1, 2 * q.N + 1)]
    x = q.threshold
    return sum(abs(a + b - c - d) < x for a, b, c, d in itertools.product(r, repeat=4))


def test_quad_examples():
    assert count_quads_fast(QuadCountQuery(1, 2, 1e-9)) == 1 == count_quads_bruteforce(QuadCountQuery(1, 3, 0.5))
    N = 7
    assert count_quads_fast(QuadCountQuery(N, 3, 1e6)) == N**4
    assert count_quads_fast(QuadCountQuery(N, 3, 1e-12)) >= 2 * N * N - N
    with pytest.raises(ValueError):
        QuadCountQuery(5, 1, 0.1)
    with pytest.raises(ValueError, match="guard"):
        count_quads_bruteforce(QuadCountQuery(301, 2, 0.1))
    with pytest.raises(ValueError, match="guard"):
        count_quads_fast(QuadCountQuery(10**5 + 1, 2, 0.1))


@given(st.integers(1, 12), st.integers(2, 4), st.floats(1e-4, 0.5))
def test_quad_fast_matches_definition(N, k, delta):
    q = QuadCountQuery(N, k, delta)
    assert count_quads_fast(q) == count_quads_bruteforce(q) == _quads_by_definition(q)


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("delta", [1e-6, 1e-3, 1e-1])
def test_quad_fast_matches_bruteforce_grid(k, delta):
    for N in (1, 2, 5, 13, 31, 60):
        q = QuadCountQuery(N, k, delta)
        assert count_quads_fast(q) == count_quads_bruteforce(q)


def test_quad_exact_tie_threshold():
    # delta N^(1/2) = 1: integer gaps between sums of square roots of squares hit the threshold
    q = QuadCountQuery(64, 2, 1 / 8)
    ties = TieLog()
    assert count_quads_fast(q, ties) == count_quads_bruteforce(q)
    assert ties.resolved > 0 and ties.unresolved == 0


@pytest.mark.parametrize("N", [10, 25, 40])
def test_quad_below_min_gap_counts_coincidences(N):
    q0 = QuadCountQuery(N, 2, 1.0)
    gap = min_nonzero_gap(q0)
    q = QuadCountQuery(N, 2, 0.5 * gap / N**0.5)
    assert count_quads_fast(q) == exact_coincidences(q) == count_quads_bruteforce(q)
    assert exact_coincidences(q) >= 2 * N * N - N


@given(st.integers(1, 10), st.floats(1e-4, 0.5))
def test_quad_swap_symmetry(N, delta):
    q = QuadCountQuery(N, 2, delta)
    r = [n**0.5 for n in range(N + 1, 2 * N + 1)]
    x = q.threshold
    fwd = sum(abs(a + b - c - d) < x for a, b, c, d in itertools.product(r, repeat=4))
    bwd = sum(abs(c + d - a - b) < x for a, b, c, d in itertools.product(r, repeat=4))
    assert fwd == bwd == count_quads_fast(q)


@given(st.integers(1, 40), st.integers(2, 3), st.floats(0, 0.05), st.floats(0, 0.05))
def test_quad_monotone_in_delta(N, k, d1, d2):
    lo, hi = sorted((d1, d2))
    assert count_quads_fast(QuadCountQuery(N, k, lo)) <= count_quads_fast(QuadCountQuery(N, k, hi))


def test_kth_power_free():
    assert kth_power_free(72, 2) == (6, 2)
    assert kth_power_free(72, 3) == (2, 9)
    assert kth_power_free(1, 2) == (1, 1)
    assert kth_power_free(97, 2) == (1, 97)


def test_exact_sign():
    one = Fraction(1)
    assert exact_sign([(one, 8), (one, 2), (-one, 18)], 2) == 0
    assert exact_sign([(one, 2), (-one, 3)], 2) == -1
    assert exact_sign([(one, 16), (-2 * one, 1)], 4) == 0
    # 10^-30-sized but nonzero
    assert exact_sign([(one, 10**30 + 1), (-one, 10**30)], 2) == 1


def test_bound_shapes_and_columns():
    qs = [QuadCountQuery(N, 2, N**-2.0) for N in (20, 40, 80)]
    rep = verify_bound_shapes(qs)
    assert rep.spread["quads"] < 2 and not rep.flags
    assert all(r.fitted_C == rep.fitted["quads"] for r in rep.rows)
    assert tuple(rep.rows[0].__dict__) == SPACING_COLUMNS
    assert rep.rows[0].bound_value == pytest.approx(quad_bound(qs[0]))


def test_delta_zero_triple_bound():
    qs = [TripleCountQuery(M, M, 0.0) for M in (25, 50, 100, 200)]
    rep = verify_bound_shapes(qs)
    for q, row in zip(qs, rep.rows):
        assert row.count <= rep.fitted["triples"] * (q.M * q.Mprime) ** 0.6
        assert row.bound_value == pytest.approx(triple_bound(q))


def test_flagging_and_saturation():
    q = QuadCountQuery(20, 2, 1e-4)
    c = verify_bound_shapes([q]).fitted["quads"]
    assert verify_bound_shapes([q], fitted={"quads": 0.4 * c}).flags
    assert not verify_bound_shapes([q], fitted={"quads": 0.6 * c}).flags
    sat = [QuadCountQuery(N, 2, 1e6) for N in (5, 10)] + [TripleCountQuery(M, M, 50.0) for M in (5, 10)]
    first = verify_bound_shapes(sat)
    assert not verify_bound_shapes(sat, fitted=first.fitted).flags


_LADDER = (25, 50, 100, 200, 400)
_DELTAS = {"0": lambda M: 0.0, "1/M": lambda M: 1 / M, "M^-1.5": lambda M: M**-1.5, "M^-2": lambda M: M**-2.0}


def _ladder_cases():
    for half in (False, True):
        for name in _DELTAS:
            marks = ()
            if half and name == "0":
                # count ~ sqrt(M M') log M: the log factor is not yet absorbed by M^0.1 at M <= 400
                marks = pytest.mark.xfail(strict=True, reason="log M growth of exact coincidences at desk scale")
            yield pytest.param(half, name, marks=marks, id=f"{'half' if half else 'equal'}-{name}")


@pytest.mark.parametrize("half,name", list(_ladder_cases()))
def test_triple_ladder_trend_flat(half, name):
    qs = [TripleCountQuery(M, M // 2 if half else M, _DELTAS[name](M)) for M in _LADDER]
    rep = verify_bound_shapes(qs)
    assert rep.spread["triples"] < 2
    assert abs(rep.trend["triples"]) <= 0.15


@pytest.mark.parametrize("k", [2, 3])
def test_quad_ladder_trend_flat(k):
    rep = verify_bound_shapes([QuadCountQuery(N, k, N**-2.0) for N in (20, 40, 80, 160)])
    assert rep.spread["quads"] < 2
    assert abs(rep.trend["quads"]) <= 0.15
