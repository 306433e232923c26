import math

import numpy as np
import pytest
from hypothesis import given
from scipy.integrate import trapezoid
from hypothesis import strategies as st

from zetamoments.kernels import EULER_GAMMA, build_divisor_table
from zetamoments.quadrature import integrate_power
from zetamoments.records import to_csv
from zetamoments.smoothed import (SMOOTHED_COLUMNS, SmoothedMoment, j1_series28, j1_series29,
                                  j_residual_sweep, jk_quadrature, series28_cutoff, series28_terms,
                                  series28_window, series29_cutoff, series29_terms)
from zetamoments.zeta import abs2_array


@pytest.fixture(scope="module")
def dtab():
    return build_divisor_table(400000)


@pytest.mark.parametrize("G", [1.0, 10.0, 100.0])
def test_weight_normalization(G):
    v = jk_quadrature(1e4, G, 1, integrand=lambda x: np.ones_like(x)).value
    assert abs(v - 1) < 1e-12


def test_argument_checks():
    for args in ((5.0, 2.0, 1), (100.0, 0.5, 1), (100.0, 2.0, 5)):
        with pytest.raises(ValueError):
            jk_quadrature(*args)
    with pytest.raises(ValueError):
        SmoothedMoment(1, 1.0, 1.0, 0.0, "bogus")


def test_reflection_flag_and_value():
    rec = jk_quadrature(10.0, 10.0, 1)
    assert rec.reflected
    u = np.linspace(-60, 60, 240001)
    f = abs2_array(10.0 + u) * np.exp(-(u / 10.0) ** 2)  # abs2_array is even in its argument
    direct = trapezoid(f, u) / (math.sqrt(math.pi) * 10.0)
    assert rec.value == pytest.approx(direct, rel=1e-6)
    assert not jk_quadrature(1e3, 10.0, 1).reflected


def test_symmetric_window_inequality():
    rng = np.random.default_rng(17)
    bad = 0
    for _ in range(100):
        t, G, k = rng.uniform(1e2, 1e4), rng.uniform(1, 30), int(rng.integers(1, 3))
        lhs = integrate_power(t - G, t + G, k)
        rhs = math.sqrt(math.pi) * math.e * G * jk_quadrature(t, G, k).value
        bad += lhs > rhs
    assert bad == 0


@given(st.floats(10, 1e5), st.floats(1, 50), st.integers(1, 4))
def test_quadrature_nonnegative(t, G, k):
    assert jk_quadrature(t, G, k).value >= 0


def test_j1_log_size_at_cube_root():
    t = 1e4
    assert jk_quadrature(t, t ** (1 / 3), 1).value <= 2 * math.log(t)


@pytest.mark.parametrize("t,G", [(1e3, 8.0), (3e3, 8.0), (1e4, 10.0), (1e4, 30.0), (5e4, 20.0), (1e5, 100.0)])
def test_series29_reproduces_quadrature_minus_main_term(t, G, dtab):
    # the O(log t) offset is, to this accuracy, the mean-square density log(t/2pi) + 2 gamma
    q = jk_quadrature(t, G, 1).value
    s = j1_series29(t, G, dtab).value
    assert abs(q - s - (math.log(t / (2 * math.pi)) + 2 * EULER_GAMMA)) < 0.1


@pytest.mark.parametrize("G", [100.0, 200.0, 1000.0])
def test_series29_first_term_dominates(G, dtab):
    t = 1e4
    first = abs(series29_terms(t, G, np.array([1]), np.array([1]))[0])
    full = j1_series29(t, G, dtab)
    tail = math.fsum(series29_terms(t, G, np.arange(1, 5000), dtab.upto(4999)))
    assert abs(full.value) <= 3 * first
    assert abs(tail) <= 3 * first


def test_series29_truncation_stability(dtab):
    t = 1e4
    G = t**0.3
    need = series29_cutoff(t, G)
    base = j1_series29(t, G, dtab)
    assert base.truncation == need == math.ceil(t * math.log(t) / G**2)
    assert abs(j1_series29(t, G, dtab, cutoff=2 * need).value - base.value) < 1e-3


@given(st.floats(1e3, 1e5), st.floats(0.2, 0.5), st.floats(1, 4))
def test_series29_cutoff_beyond_rule_is_stable(t, theta, factor):
    G = t**theta
    dt = build_divisor_table(400000)
    need = series29_cutoff(t, G)
    if int(factor * need) > dt.limit:
        return
    a = j1_series29(t, G, dt)
    b = j1_series29(t, G, dt, cutoff=int(factor * need))
    assert abs(a.value - b.value) < 1e-3


def test_series29_cutoff_validation(dtab):
    t, G = 1e4, 20.0
    need = series29_cutoff(t, G)
    with pytest.raises(ValueError, match="below"):
        j1_series29(t, G, dtab, cutoff=need - 1)
    with pytest.raises(ValueError, match="limit"):
        j1_series29(t, G, build_divisor_table(need), cutoff=need + 1)


def test_series28_cutoff_rule():
    t = 1e4
    G = t**0.3
    c = series28_cutoff(t, G)
    assert c == math.floor(2 * t * math.log(1e16) / (math.pi * G * G)) + 1
    assert math.exp(-math.pi * c * G * G / (2 * t)) < 1e-16
    assert c < 2000


def test_series28_window(dtab):
    t = 1e4
    lo, hi = series28_window(t)
    j1_series28(t, lo, dtab)
    j1_series28(t, hi, dtab)
    for G in (0.9 * lo, 1.1 * hi):
        with pytest.raises(ValueError, match="outside"):
            j1_series28(t, G, dtab)


@given(st.floats(1e3, 1e5), st.floats(0.25, 0.6))
def test_series_share_phase(t, theta):
    n = np.arange(1, 400)
    d = np.ones(n.size)
    a = series28_terms(t, t**theta, n, d)
    b = series29_terms(t, t**theta, n, d)
    both = (np.abs(a) > 1e-250) & (np.abs(b) > 1e-250)
    assert np.all(np.sign(a[both]) == np.sign(b[both]))


def test_series28_close_to_series29(dtab):
    for t in (1e3, 1e4, 1e5):
        G = t**0.35
        assert abs(j1_series28(t, G, dtab).value - j1_series29(t, G, dtab).value) < 0.1


def test_sweep_identical_pair_zero():
    sw = j_residual_sweep([(1e3, 5.0, 1), (2e3, 7.0, 2)], ("quadrature", "quadrature"))
    assert np.all(sw.residuals == 0) and sw.fitted_C == 0
    assert all(r.residual_vs_quadrature == 0 for r in sw.rows)


def test_sweep_csv_columns():
    sw = j_residual_sweep([(1e3, 10.0, 1)])
    text = to_csv(sw.rows)
    assert text.splitlines()[0] == ",".join(SMOOTHED_COLUMNS)
    assert text == to_csv(j_residual_sweep([(1e3, 10.0, 1)]).rows)
    assert [r.method for r in sw.rows] == ["quadrature", "series29"]
    with pytest.raises(ValueError):
        j_residual_sweep([])
