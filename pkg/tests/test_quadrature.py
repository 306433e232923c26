import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from zetamoments.quadrature import (DEFAULT_QUADRATURE, GridSampler, MomentCache, QuadratureConfig,
                                    gaussian_half_width, integrate_power, moment_cache,
                                    smoothed_on_grid, trapezoid_on_grid)
from zetamoments.zeta import abs2_array, zeta_em


@pytest.fixture(scope="module")
def cache():
    return MomentCache()


def test_low_range_against_em_oracle(cache):
    # scipy adaptive quadrature on the Euler-Maclaurin values, independent of the RS kernel
    f = lambda t: zeta_em(t, 12).abs2
    ref = sum(quad(f, a, a + 10, limit=200, epsabs=1e-11, epsrel=1e-12)[0] for a in range(0, 60, 10))
    assert cache.integral(60.0, 1) == pytest.approx(ref, rel=1e-9)
    assert integrate_power(0.0, 60.0, 1) == pytest.approx(ref, rel=1e-9)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_cache_matches_direct_panels(cache, k):
    a, b = 1234.0, 1300.5
    direct = integrate_power(a, b, k)
    cached = cache.integral(b, k) - cache.integral(a, k)
    assert cached == pytest.approx(direct, rel=1e-9)


def test_cache_zero_and_validation(cache):
    assert cache.integral(0.0, 2) == 0.0
    with pytest.raises(ValueError):
        cache.integral(10.0, 5)
    with pytest.raises(ValueError):
        cache.integral(-1.0, 1)


def test_cache_only_grows(cache):
    cache.integral(500.0, 1)
    ext = cache.extent
    first = cache.integral(123.25, 3)
    cache.integral(2000.0, 1)
    assert cache.extent >= max(ext, 2001)
    assert cache.integral(123.25, 3) == first


def test_error_estimate_small():
    c = moment_cache()
    assert c.error_estimate(1e4, 1) < 1e-3


@given(st.floats(10, 5e3), st.floats(0.1, 30))
def test_integrate_power_additive(a, w):
    m = a + w / 3
    whole = integrate_power(a, a + w, 2)
    parts = integrate_power(a, m, 2) + integrate_power(m, a + w, 2)
    assert whole == pytest.approx(parts, rel=1e-9, abs=1e-12)
    assert integrate_power(a + w, a, 2) == pytest.approx(-whole, rel=1e-15)


def test_integrate_power_hook_polynomial():
    # 8-node GL is exact for degree 15
    val = integrate_power(0.0, 3.0, 1, integrand=lambda t: t**7 - 2 * t)
    assert val == pytest.approx(3.0**8 / 8 - 9.0, rel=1e-13)


def test_panel_width_rule():
    cfg = QuadratureConfig()
    for t in (10.0, 1e3, 1e5):
        q = int(cfg.panels_per_unit(t))
        assert 1.0 / q <= min(0.25, 1.5 / math.log(t)) + 1e-12


def test_grid_sampler_negative_indices_mirror():
    s = GridSampler(0.05)
    vals = s.values(-200, 201)
    assert np.allclose(vals, vals[::-1], rtol=1e-12)
    assert np.allclose(s.values(100, 140), abs2_array(0.05 * np.arange(100, 140)), rtol=1e-10)


def test_smoothed_on_grid_constant_weight():
    s = GridSampler(0.05)
    t, J = smoothed_on_grid(1000.0, 1002.0, 5.0, 1, s)
    assert t[0] == pytest.approx(1000.0) and t[-1] == pytest.approx(1002.0)
    G = 5.0
    u = np.arange(-gaussian_half_width(G), gaussian_half_width(G), 0.001)
    direct = np.sum(abs2_array(1001.0 + u) * np.exp(-(u / G) ** 2)) * 0.001 / (math.sqrt(math.pi) * G)
    assert J[20] == pytest.approx(direct, rel=1e-6)


def test_trapezoid_on_grid_off_grid_ends():
    t = np.arange(0, 10.01, 0.05)
    assert trapezoid_on_grid(t, 2 * t + 1, 1.012, 7.333) == pytest.approx(
        (7.333**2 + 7.333) - (1.012**2 + 1.012), rel=1e-12)
