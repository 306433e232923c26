import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetamoments.zeta import (RS_MIN_T, abs2_array, abs2_grid, abs_zeta_pow, hardy_z,
                              riemann_siegel_theta, theta_exact, zeta_em, zeta_em_bound, zeta_rs)

FIRST_ZERO = 14.134725141734695


def _mp_zeta(t):
    mp.mp.dps = 30
    return complex(mp.zeta(mp.mpc(0.5, t)))


def test_first_zero():
    assert math.sqrt(zeta_rs(FIRST_ZERO).abs2) < 1e-6
    assert math.sqrt(zeta_em(FIRST_ZERO).abs2) < 1e-6
    assert abs_zeta_pow(FIRST_ZERO, 2) < 1e-10


def test_rs_vs_em_at_100():
    a, b = zeta_rs(100), zeta_em(100)
    assert abs(a.value - b.value) < 1e-8


def test_em_at_zero():
    p = zeta_em(0)
    assert p.re == pytest.approx(-1.4603545088095868, abs=1e-13)
    assert p.im == 0


@pytest.mark.parametrize("t", [0.5, 3.0, 14.0, 100.0, 1234.5, 9999.0])
def test_em_matches_mpmath(t):
    assert abs(zeta_em(t).value - _mp_zeta(t)) < 1e-10
    assert zeta_em_bound(t) < 1e-10


@pytest.mark.parametrize("t", [10.0, 57.3, 1e3, 5e4, 1e6, 1e7])
def test_rs_matches_mpmath(t):
    assert abs(zeta_rs(t).value - _mp_zeta(t)) < 1e-6


def test_rs_rejects_small_t():
    with pytest.raises(ValueError, match="zeta_em"):
        zeta_rs(5.0)


@given(st.floats(RS_MIN_T, 1e5))
def test_conjugate_symmetry(t):
    a, b = zeta_rs(t), zeta_rs(-t)
    assert (b.re, b.im) == (a.re, -a.im)
    c, d = zeta_em(t / 100), zeta_em(-t / 100)
    assert c.re == pytest.approx(d.re, abs=1e-12) and c.im == pytest.approx(-d.im, abs=1e-12)


@given(st.floats(RS_MIN_T, 1e6))
def test_abs2_consistent(t):
    p = zeta_rs(t)
    assert p.abs2 == pytest.approx(p.re**2 + p.im**2, rel=1e-15, abs=1e-300)
    assert abs_zeta_pow(t, 1) == p.abs2
    assert abs_zeta_pow(t, 2) == pytest.approx(p.abs2**2, rel=1e-15, abs=1e-300)


def test_rs_vs_em_random():
    rng = np.random.default_rng(2024)
    t = rng.uniform(10, 1e4, 1000)
    diff = max(abs(zeta_rs(x).value - zeta_em(x).value) for x in t)
    assert diff < 1e-6


def test_hardy_reality():
    rng = np.random.default_rng(5)
    for t in rng.uniform(10, 1e4, 1000):
        p = zeta_rs(t)
        rotated = complex(math.cos(theta_exact(t)), math.sin(theta_exact(t))) * p.value
        assert abs(rotated.imag) < 1e-6


def test_theta_series_matches_loggamma():
    t = np.geomspace(10, 1e7, 300)
    ref = theta_exact(t)
    # 1e-8 absolute, up to rounding of a value as large as 7e7
    assert np.all(np.abs(riemann_siegel_theta(t) - ref) <= 1e-8 + 4e-16 * np.abs(ref))
    mp.mp.dps = 30
    for x in (10.0, 1e3, 1e6):
        assert riemann_siegel_theta(x) == pytest.approx(float(mp.siegeltheta(x)), abs=1e-9)


def test_hardy_zero_count_to_100():
    t = np.arange(0.0, 100.0, 0.005)
    z = hardy_z(t)
    assert np.count_nonzero(np.sign(z[1:]) != np.sign(z[:-1])) == 29


def test_grid_matches_pointwise():
    t0, h, n = 5.0, 0.037, 4000  # crosses the switch-over height
    grid = abs2_grid(t0, h, n)
    direct = abs2_array(t0 + h * np.arange(n))
    assert np.max(np.abs(grid - direct) / np.maximum(1, direct)) < 1e-9
    assert abs2_grid(1e5, 0.05, 0).size == 0
