import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetamoments.atkinson import (ET_COLUMNS, AtkinsonParams, ETRecord, e_atkinson, e_direct,
                                  mean_square_main_term, sigma1, sigma1_terms, sigma2, sigma2_terms)
from zetamoments.kernels import EULER_GAMMA, atkinson_e, atkinson_f, build_divisor_table
from zetamoments.quadrature import QuadratureConfig, QuadratureError


@pytest.fixture(scope="module")
def dtab():
    return build_divisor_table(3 * 10**5)


def test_gamma_constant():
    assert EULER_GAMMA == pytest.approx(0.5772156649015329, abs=1e-16)


def test_constant_integrand_hook():
    for T in (10.0, 1234.5, 1e4):
        expected = T - T * math.log(T / (2 * math.pi)) - (2 * EULER_GAMMA - 1) * T
        assert e_direct(T, integrand=lambda t: np.ones_like(t)) == pytest.approx(expected, rel=1e-12)


def test_e_direct_domain():
    with pytest.raises(ValueError):
        e_direct(5.0)


def test_quadrature_failure_reports_estimate():
    with pytest.raises(QuadratureError, match="achieved error estimate"):
        e_direct(1e3, QuadratureConfig(tol=1e-30))


def test_e_direct_size_at_1e4():
    # |E(T)| << T^(72/227 + eps); at this height the constant is far below 1
    assert abs(e_direct(1e4)) <= 1e4 ** (72 / 227 + 0.05)


def test_sigma_empty_and_single(dtab):
    T = 1e4
    assert sigma1(T, 0.5, dtab) == 0.0 and sigma2(T, 0.9, dtab) == 0.0
    one = -math.sqrt(2) * (T / (2 * math.pi)) ** 0.25 * atkinson_e(T, 1) * math.cos(atkinson_f(T, 1))
    assert sigma1(T, 1, dtab) == pytest.approx(one, rel=1e-14)
    L = math.log(T / (2 * math.pi))
    assert sigma2(T, 1.5, dtab) == pytest.approx(-2 / L * math.cos(T * L - T + math.pi / 4), rel=1e-12)


def test_sigma_table_too_small():
    small = build_divisor_table(100)
    with pytest.raises(ValueError, match="limit"):
        sigma1(1e4, 1e3, small)


def test_sigma2_rejects_log_domain(dtab):
    with pytest.raises(ValueError, match="range"):
        sigma2(100.0, 20.0, dtab)


def _mp_sigma(T, n_max, which, dtab):
    mp.mp.dps = 40
    T = mp.mpf(T)
    acc = mp.mpf(0)
    for n in range(1, n_max + 1):
        d = int(dtab[n])
        if which == 1:
            x = mp.sqrt(mp.pi * n / (2 * T))
            e = (1 + mp.pi * n / (2 * T)) ** mp.mpf(-0.25) * x / mp.asinh(x)
            f = 2 * T * mp.asinh(x) + mp.sqrt(2 * mp.pi * n * T + mp.pi**2 * n**2) - mp.pi / 4
            acc += (-1) ** n * d * mp.mpf(n) ** mp.mpf(-0.75) * e * mp.cos(f)
        else:
            L = mp.log(T / (2 * mp.pi * n))
            acc += d / mp.sqrt(n) / L * mp.cos(T * L - T + mp.pi / 4)
    if which == 1:
        return float(mp.sqrt(2) * (T / (2 * mp.pi)) ** mp.mpf(0.25) * acc)
    return float(-2 * acc)


def test_sigma_high_precision(dtab):
    T = 1e4
    p = AtkinsonParams.build(T)
    s1 = sigma1(T, p.N, dtab)
    s2 = sigma2(T, p.Nprime, dtab)
    assert s1 == pytest.approx(_mp_sigma(T, int(p.N), 1, dtab), rel=1e-8)
    assert s2 == pytest.approx(_mp_sigma(T, int(p.Nprime), 2, dtab), rel=1e-8)


def test_compensated_vs_naive_sum(dtab):
    T = 1e5
    terms = sigma1_terms(T, T, dtab)
    assert abs(math.fsum(terms) - np.sum(terms)) <= 1e-6 * abs(math.fsum(terms))


def test_params_window():
    with pytest.raises(ValueError):
        AtkinsonParams.build(1e3, 400.0)
    with pytest.raises(ValueError):
        AtkinsonParams.build(1e3, 2000.0)
    p = AtkinsonParams.build(1e3)
    assert p.N == 1e3 and 0 < p.Nprime < 1e3 / (2 * math.pi)


def test_domain_at_two_pi_thousand(dtab):
    rec = e_atkinson(2 * math.pi * 1e3, dtab=dtab)
    assert all(math.isfinite(v) for v in rec.as_row().values())


def test_record_invariants(dtab):
    rec = e_atkinson(3000.0, dtab=dtab)
    assert isinstance(rec, ETRecord)
    assert rec.e_atkinson == rec.sigma1 + rec.sigma2
    assert rec.residual == rec.e_direct - rec.e_atkinson
    assert tuple(rec.as_row()) == ET_COLUMNS
    assert e_direct(3000.0) == pytest.approx(rec.e_direct, rel=0, abs=0)


def test_residual_small_at_moderate_height(dtab):
    for T in (1e3, 1e4):
        assert abs(e_atkinson(T, dtab=dtab).residual) <= math.log(T) ** 2


@given(st.floats(0.51, 1.99))
def test_n_choice_changes_sum_by_log_squared(ratio):
    T = 1e4
    dt = build_divisor_table(20001)
    base = e_atkinson(T, T, dt).e_atkinson
    other = e_atkinson(T, ratio * T, dt).e_atkinson
    assert abs(other - base) <= math.log(T) ** 2


def test_sign_change_on_range():
    vals = [e_direct(T) for T in np.linspace(1e3, 1e4, 40)]
    assert min(vals) < 0 < max(vals)


def test_main_term():
    T = 5000.0
    assert mean_square_main_term(T) == pytest.approx(T * math.log(T / (2 * math.pi)) + (2 * EULER_GAMMA - 1) * T)
