"""Fast internal checks: the elementary identities and edge cases of every module."""
from __future__ import annotations

import json
import contextlib
import io
import math
import tempfile
import traceback
from pathlib import Path

import numpy as np

CHECKS: list[tuple[str, str, object]] = []


def check(module: str):
    def wrap(fn):
        CHECKS.append((module, fn.__name__, fn))
        return fn
    return wrap


def _close(a, b, tol=1e-12):
    assert abs(a - b) <= tol * max(1.0, abs(b)), f"{a!r} != {b!r}"


# -- kernels -----------------------------------------------------------------

@check("kernels")
def divisor_table_limit_one():
    from .kernels import build_divisor_table
    assert list(build_divisor_table(1).values) == [1]


@check("kernels")
def divisor_table_twelve():
    from .kernels import build_divisor_table
    assert build_divisor_table(12)[12] == 6


@check("kernels")
def divisor_table_rejects_zero():
    from .kernels import build_divisor_table
    try:
        build_divisor_table(0)
    except ValueError:
        return
    raise AssertionError("limit 0 accepted")


@check("kernels")
def phase_at_two_pi():
    from .kernels import atkinson_f
    T = 2 * math.pi
    expect = 2 * T * math.log((1 + math.sqrt(5)) / 2) + math.sqrt(5 * math.pi**2) - math.pi / 4
    _close(atkinson_f(T, 1), expect)


@check("kernels")
def nprime_at_two_pi():
    from .kernels import atkinson_nprime
    T = 2 * math.pi
    # N^2/4 + N T/(2 pi) = pi^2 + 2 pi here
    _close(atkinson_nprime(T, T), 1 + math.pi - math.sqrt(math.pi**2 + 2 * math.pi))


@check("kernels")
def gaussian_integral_standard():
    from .kernels import gaussian_integral
    _close(gaussian_integral(0, 1).real, math.sqrt(math.pi))
    _close(gaussian_integral(2, 1).real, math.sqrt(math.pi) * math.e)


@check("kernels")
def p4_simple_values():
    from .kernels import P4Coefficients, p4_eval
    assert p4_eval(P4Coefficients(0, 0, 0, 0, 0), 3.7) == 0
    assert p4_eval(P4Coefficients(1, 0, 0, 0, 0), 2.0) == 16


# -- zeta --------------------------------------------------------------------

@check("zeta")
def rs_conjugate_symmetry():
    from .zeta import zeta_rs
    a, b = zeta_rs(50.0), zeta_rs(-50.0)
    assert a.re == b.re and a.im == -b.im


@check("zeta")
def em_conjugate_symmetry():
    from .zeta import zeta_em
    a, b = zeta_em(7.5), zeta_em(-7.5)
    _close(a.re, b.re, 1e-13)
    _close(a.im, -b.im, 1e-13)


@check("zeta")
def abs_pow_matches_point():
    from .zeta import abs_zeta_pow, zeta_rs
    p = zeta_rs(123.4)
    _close(abs_zeta_pow(123.4, 1), p.abs2, 1e-14)
    _close(abs_zeta_pow(123.4, 2), p.abs2**2, 1e-14)


@check("zeta")
def rs_rejects_small_t():
    from .zeta import zeta_rs
    try:
        zeta_rs(5.0)
    except ValueError as e:
        assert "zeta_em" in str(e)
        return
    raise AssertionError("t=5 accepted")


# -- atkinson ----------------------------------------------------------------

@check("atkinson")
def e_direct_constant_integrand():
    from .atkinson import e_direct
    from .kernels import EULER_GAMMA
    T = 1234.5
    got = e_direct(T, integrand=lambda t: np.ones_like(t))
    _close(got, T - T * math.log(T / (2 * math.pi)) - (2 * EULER_GAMMA - 1) * T, 1e-12)


@check("atkinson")
def sigma_sums_empty_and_single():
    from .atkinson import sigma1, sigma2
    from .kernels import atkinson_e, atkinson_f, build_divisor_table
    d = build_divisor_table(10)
    T = 5000.0
    assert sigma1(T, 0.5, d) == 0 and sigma2(T, 0.9, d) == 0
    _close(sigma1(T, 1, d), -math.sqrt(2) * (T / (2 * math.pi)) ** 0.25 * atkinson_e(T, 1) * math.cos(atkinson_f(T, 1)))
    L = math.log(T / (2 * math.pi))
    _close(sigma2(T, 1, d), -2 / L * math.cos(T * L - T + math.pi / 4))


@check("atkinson")
def domain_check_at_two_pi_thousand():
    from .atkinson import e_atkinson
    r = e_atkinson(2 * math.pi * 1000)
    assert all(math.isfinite(v) for v in (r.e_direct, r.sigma1, r.sigma2, r.residual))
    _close(r.e_atkinson, r.sigma1 + r.sigma2, 1e-15)


# -- smoothed ----------------------------------------------------------------

@check("smoothed")
def weight_normalization():
    from .smoothed import jk_quadrature
    for G in (1.0, 10.0, 100.0):
        v = jk_quadrature(1000.0, G, 1, integrand=lambda x: np.ones_like(x)).value
        assert abs(v - 1) <= 1e-12, v


@check("smoothed")
def series28_cutoff_rule():
    from .smoothed import series28_cutoff
    t = 1e4
    G = t**0.3
    n = series28_cutoff(t, G)
    assert math.exp(-math.pi * n * G * G / (2 * t)) < 1e-16 <= math.exp(-math.pi * (n - 1) * G * G / (2 * t))
    assert n < 10**4


@check("smoothed")
def identical_methods_zero_residual():
    from .smoothed import j_residual_sweep
    sw = j_residual_sweep([(1000.0, 5.0, 1), (2000.0, 6.0, 1)], ("series29", "series29"))
    assert np.all(sw.residuals == 0)


@check("smoothed")
def smoothed_csv_column_order():
    from .records import to_csv
    from .smoothed import SMOOTHED_COLUMNS, j_residual_sweep
    sw = j_residual_sweep([(1000.0, 5.0, 1)])
    a, b = to_csv(sw.rows, SMOOTHED_COLUMNS), to_csv(sw.rows, SMOOTHED_COLUMNS)
    assert a == b and a.splitlines()[0] == ",".join(SMOOTHED_COLUMNS)


# -- spectral ----------------------------------------------------------------

@check("spectral")
def empty_spectral_file():
    from .spectral import load_spectral
    with tempfile.TemporaryDirectory() as d:
        p = Path(d) / "empty.txt"
        p.write_text("")
        assert len(load_spectral(p)) == 0


@check("spectral")
def out_of_order_reports_line_two():
    from .spectral import SpectralFormatError, load_spectral
    with tempfile.TemporaryDirectory() as d:
        p = Path(d) / "bad.txt"
        p.write_text("10.5 1.0\n9.5 2.0\n")
        try:
            load_spectral(p)
        except SpectralFormatError as e:
            assert e.lineno == 2
            return
    raise AssertionError("out-of-order kappa accepted")


@check("spectral")
def empty_dataset_series_is_zero():
    from .spectral import SpectralDataset, j2_spectral
    assert j2_spectral(1e4, 500.0, SpectralDataset()).value == 0


@check("spectral")
def window_sums_at_edges():
    from .spectral import SpectralDataset, spectral_window_sum
    ds = SpectralDataset.from_arrays([2.0, 3.0, 5.0], [1.0, 10.0, 100.0])
    assert spectral_window_sum(ds, 50.0) == 0
    assert spectral_window_sum(ds, 5.5) == 100.0
    assert spectral_window_sum(ds, 2.5) == 11.0


@check("spectral")
def quadruple_counts_trivial():
    from .spectral import SpectralDataset, count_spectral_quadruples
    ds = SpectralDataset.from_arrays([10.2, 11.7, 13.1, 17.9, 19.3], [1, 1, 1, 1, 1])
    n = 5
    assert count_spectral_quadruples(ds, 10.0, 1e9) == n**4
    small = count_spectral_quadruples(ds, 10.0, 1e-9)
    assert small >= 2 * n * n - n  # diagonal (j, m) = (l, n) or (n, l)
    counts = [count_spectral_quadruples(ds, 10.0, d) for d in (1e-9, 0.1, 1.0, 5.0, 1e9)]
    assert counts == sorted(counts)


# -- spacing -----------------------------------------------------------------

@check("spacing")
def triple_sqrt2_identity():
    from .spacing import TripleCountQuery, count_triples_bruteforce, count_triples_fast
    q = TripleCountQuery(1, 1, 0.0)
    assert count_triples_bruteforce(q) == count_triples_fast(q) == 1


@check("spacing")
def triple_saturation():
    from .spacing import TripleCountQuery, count_triples_fast
    M, Mp, delta = 6, 3, 50.0
    expect = 0
    for m in range(M + 1, 2 * M + 1):
        for n in range(Mp + 1, 2 * Mp + 1):
            s = math.sqrt(m) + math.sqrt(n)
            expect += math.floor((s + delta * math.sqrt(M)) ** 2)  # every k >= 1 up to the top
    assert count_triples_fast(TripleCountQuery(M, Mp, delta)) == expect


@check("spacing")
def triple_delta_zero_perfect_squares():
    from .spacing import TripleCountQuery, count_triples_fast
    M, Mp = 20, 9
    expect = sum(1 for m in range(M + 1, 2 * M + 1) for n in range(Mp + 1, 2 * Mp + 1)
                 if math.isqrt(m * n) ** 2 == m * n)
    assert count_triples_fast(TripleCountQuery(M, Mp, 0.0)) == expect


@check("spacing")
def counts_monotone_in_delta():
    from .spacing import QuadCountQuery, TripleCountQuery, count_quads_fast, count_triples_fast
    t = [count_triples_fast(TripleCountQuery(15, 7, d)) for d in (0.0, 1e-3, 1e-2, 0.1, 1.0)]
    q = [count_quads_fast(QuadCountQuery(12, 2, d)) for d in (0.0, 1e-4, 1e-2, 0.1, 1.0)]
    assert t == sorted(t) and q == sorted(q)


@check("spacing")
def quad_saturation_and_single():
    from .spacing import QuadCountQuery, count_quads_bruteforce, count_quads_fast
    assert count_quads_fast(QuadCountQuery(7, 3, 1e6)) == 7**4
    assert count_quads_bruteforce(QuadCountQuery(1, 2, 1e-9)) == count_quads_fast(QuadCountQuery(1, 2, 1e-9)) == 1


@check("spacing")
def quad_swap_symmetry():
    from .spacing import QuadCountQuery, _roots
    q = QuadCountQuery(6, 2, 0.05)
    _, r = _roots(q)
    P = (r[:, None] + r[None, :]).ravel()
    diff = P[:, None] - P[None, :]
    x = q.threshold
    assert np.count_nonzero(np.abs(diff) < x) == np.count_nonzero(np.abs(diff.T) < x)


@check("spacing")
def saturation_never_flags():
    from .spacing import QuadCountQuery, verify_bound_shapes
    qs = [QuadCountQuery(n, 2, 1e3) for n in (4, 8, 16)]
    first = verify_bound_shapes(qs)
    again = verify_bound_shapes(qs, fitted=first.fitted)
    assert not again.flags


# -- experiments ---------------------------------------------------------------

@check("experiments")
def moment_at_zero():
    from .experiments import i_k
    assert all(i_k(0.0, k) == 0.0 for k in (1, 2, 3, 4))


@check("experiments")
def exceedance_trivial():
    from .experiments import exceedance_measure
    rows = exceedance_measure(100.0, 3.0, 1, [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 1e9])
    _close(rows[0][1], 100.0, 1e-12)
    mu = [m for _, m in rows]
    assert mu == sorted(mu, reverse=True) and mu[-1] == 0


@check("experiments")
def large_values_trivial():
    from .experiments import large_value_points
    assert large_value_points(100.0, 1e3).R == 0
    rec = large_value_points(100.0, 1.0)
    assert rec.R >= 1 and rec.check()


@check("experiments")
def small_v_flagged():
    from .experiments import theorem4_pipeline
    rep = theorem4_pipeline(200.0, 1, 2, 0.0, [1.0, 3.0])
    assert not rep.rows[0].included and rep.rows[1].included and rep.flags


@check("experiments")
def convexity_at_zero_ordinate():
    from .experiments import pointwise_convexity_check
    rep = pointwise_convexity_check([14.134725141734695], 1)
    assert rep["rows"][0].lhs < 1e-6 and rep["fitted_C"] < 1e-6


# -- cli / records -------------------------------------------------------------

@check("cli")
def cli_no_arguments():
    from .cli import main
    err = io.StringIO()
    with contextlib.redirect_stderr(err):
        assert main([]) == 1
    assert "usage" in err.getvalue()


@check("cli")
def cli_etterm_header():
    from .atkinson import ET_COLUMNS
    from .cli import main
    with tempfile.TemporaryDirectory() as d:
        out = Path(d) / "e.csv"
        assert main(["etterm", "--tmin", "1000", "--tmax", "2000", "--points", "3", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert lines[0] == ",".join(ET_COLUMNS) and len(lines) == 4


@check("cli")
def emit_empty_is_header_only():
    from .atkinson import ET_COLUMNS
    from .records import emit
    with tempfile.TemporaryDirectory() as d:
        p = Path(d) / "x.csv"
        emit([], "csv", p, ET_COLUMNS)
        assert p.read_text() == ",".join(ET_COLUMNS) + "\n"


@check("cli")
def emit_json_round_trip():
    from .records import ExperimentRecord, emit
    rec = ExperimentRecord(("a", "b", "c"), (0.1, 7, "x"))
    with tempfile.TemporaryDirectory() as d:
        p = Path(d) / "x.json"
        emit([rec], "json", p)
        assert json.loads(p.read_text()) == [rec.as_dict()]


@check("cli")
def emit_csv_stable():
    from .records import to_csv
    rows = [{"z": 1.0 / 3, "a": 2, "m": "q"}]
    assert to_csv(rows) == to_csv(rows) == "z,a,m\n0.33333333333333331,2,q\n"


def run_selftest(verbose: bool = False, stream=None) -> tuple[int, int]:
    """Run every check; returns (passed, failed)."""
    passed = failed = 0
    for module, name, fn in CHECKS:
        try:
            fn()
        except Exception as e:  # report and carry on
            failed += 1
            if stream is not None:
                print(f"FAIL {module}.{name}: {e!r}", file=stream)
                if verbose:
                    traceback.print_exc(file=stream)
        else:
            passed += 1
            if stream is not None and verbose:
                print(f"ok   {module}.{name}", file=stream)
    return passed, failed
