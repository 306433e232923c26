import itertools
import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetamoments.spectral import (SpectralDataset, SpectralFormatError, count_spectral_quadruples,
                                  j2_cutoff, j2_spectral, j2_window, load_spectral,
                                  partial_sum_shape, spectral_window_sum, window_sum_shape,
                                  write_spectral)


def weyl_dataset(K_max, weight=lambda k: np.log(k) ** 3):
    """Synthetic table: Weyl-law spacing kappa_j ~ sqrt(12 j), weights of the right average size."""
    j = np.arange(1, int(K_max**2 / 12) + 2)
    kappa = np.sqrt(12.0 * j) + 3.0
    return SpectralDataset.from_arrays(kappa, weight(kappa), "synthetic", "test weights")


def test_empty_file(tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    ds = load_spectral(p)
    assert len(ds) == 0 and ds.max_kappa == 0.0
    assert "sha256:" in ds.source


def test_out_of_order_line_two(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("9.6 1.0\n9.5 2.0\n")
    with pytest.raises(SpectralFormatError) as e:
        load_spectral(p)
    assert e.value.lineno == 2 and ":2:" in str(e.value)


def test_single_datum_and_header(tmp_path):
    p = tmp_path / "one.txt"
    p.write_text("# normalization: alpha_j H_j^3(1/2), Motohashi convention\n\n9.5336952613535 0.1234  # first\n")
    ds = load_spectral(p)
    assert len(ds) == 1 and ds.data[0].kappa == 9.5336952613535 and ds.data[0].alphaH3 == 0.1234
    assert ds.normalization.startswith("alpha_j")
    assert ds.data[0].eigenvalue == pytest.approx(9.5336952613535**2 + 0.25)


@pytest.mark.parametrize("line,msg", [
    ("1.0 nan", "finite"), ("1.0 inf", "finite"), ("-2 1.0", "positive"),
    ("1.0", "expected"), ("1 2 3", "expected"), ("x 1.0", "decimal"),
])
def test_bad_lines(tmp_path, line, msg):
    p = tmp_path / "bad.txt"
    p.write_text("0.5 1\n" + line + "\n")
    with pytest.raises(SpectralFormatError, match=msg) as e:
        load_spectral(p)
    assert e.value.lineno == 2


def test_duplicate_kappa_rejected(tmp_path):
    p = tmp_path / "dup.txt"
    p.write_text("1.0 1\n1.0 2\n")
    with pytest.raises(SpectralFormatError):
        load_spectral(p)


@given(st.lists(st.floats(1e-3, 1e6), min_size=0, max_size=30, unique=True),
       st.data())
def test_round_trip(tmp_path_factory, kappas, data):
    kappas = sorted(kappas)
    w = data.draw(st.lists(st.floats(-1e9, 1e9), min_size=len(kappas), max_size=len(kappas)))
    ds = SpectralDataset.from_arrays(kappas, w, "memory", "n")
    p = tmp_path_factory.mktemp("rt") / "s.txt"
    write_spectral(ds, p)
    back = load_spectral(p)
    assert back.data == ds.data and back.normalization == "n"


def test_j2_empty_is_zero():
    rec = j2_spectral(1e4, 500.0, SpectralDataset())
    assert rec.value == 0.0 and rec.method == "spectral" and rec.k == 2


def test_j2_coverage_and_window():
    ds = weyl_dataset(100.0)
    with pytest.raises(ValueError, match="coverage"):
        j2_spectral(1e4, 500.0, ds)
    lo, hi = j2_window(1e4)
    with pytest.raises(ValueError, match="outside"):
        j2_spectral(1e4, 0.5 * lo, ds)
    with pytest.raises(ValueError, match="outside"):
        j2_spectral(1e4, 1.5 * hi, ds)


def test_j2_matches_direct_sum():
    t, G = 1e4, 800.0
    ds = weyl_dataset(j2_cutoff(t, G) + 5)
    rec = j2_spectral(t, G, ds)
    mp.mp.dps = 30
    K = t * math.log(t) / G
    ref = mp.mpf(0)
    for d in ds.data:
        if d.kappa <= K:
            k = mp.mpf(d.kappa)
            ref += d.alphaH3 / mp.sqrt(k) * mp.sin(k * mp.log(k / (4 * mp.e * t))) * mp.exp(-(G * k / t) ** 2 / 4)
    ref *= mp.pi / mp.sqrt(2 * t)
    assert rec.value == pytest.approx(float(ref), rel=1e-9, abs=1e-12)
    assert rec.truncation == sum(d.kappa <= K for d in ds.data)


def test_j2_truncation_stability():
    t, G = 1e4, 500.0
    ds = weyl_dataset(3 * j2_cutoff(t, G))
    a = j2_spectral(t, G, ds).value
    b = j2_spectral(t, G, ds, cutoff_factor=2).value
    assert abs(a - b) < 1e-3


def test_j2_bounded_for_wide_windows():
    vals = []
    for t in (1e4, 1e5, 1e6):
        G = min(t ** (2 / 3) * math.log(t), j2_window(t)[1])
        ds = weyl_dataset(j2_cutoff(t, G) + 5)
        vals.append(abs(j2_spectral(t, G, ds).value))
    assert max(vals) < 1.0


def test_window_sum_edges():
    ds = SpectralDataset.from_arrays([1.0, 2.0, 3.0, 4.0], [1.0, 10.0, 100.0, 1000.0])
    assert spectral_window_sum(ds, 2.0) == 111.0  # both ends inclusive
    assert spectral_window_sum(ds, 4.5) == 1000.0  # [3.5, 5.5] holds only the last point
    assert spectral_window_sum(ds, 4.0) == 1100.0
    assert spectral_window_sum(ds, 50.0) == 0.0
    with pytest.raises(ValueError):
        spectral_window_sum(ds, 0.5)


def test_shape_checks_on_weyl_data():
    ds = weyl_dataset(2000.0)
    K = np.geomspace(20, 1900, 12)
    ps = partial_sum_shape(ds, K)
    ws = window_sum_shape(ds, K, eps=1.0)  # log^3 K weights need a log-sized eps at this range
    assert not ps.flags and ps.fitted_C < 1
    assert not ws.flags


def test_shape_check_flags_bad_data():
    ds = weyl_dataset(2000.0, weight=lambda k: k**2)
    assert partial_sum_shape(ds, np.geomspace(20, 1900, 12)).flags


def _brute_quads(ds, K, delta):
    r = [math.sqrt(d.kappa**2 + 0.25) for d in ds.data if K < d.kappa <= 2 * K]
    return sum(abs(a + b - c - e) < delta for a, b, c, e in itertools.product(r, repeat=4))


@given(st.lists(st.floats(1, 40), min_size=0, max_size=12, unique=True), st.floats(1e-6, 5))
def test_quadruples_match_enumeration(kappas, delta):
    ds = SpectralDataset.from_arrays(sorted(kappas), np.ones(len(kappas)))
    assert count_spectral_quadruples(ds, 10.0, delta) == _brute_quads(ds, 10.0, delta)


def test_quadruples_trivial_cases():
    ds = weyl_dataset(60.0)
    n = int(np.count_nonzero((ds.kappas > 20) & (ds.kappas <= 40)))
    assert count_spectral_quadruples(ds, 20.0, 1e9) == n**4
    assert count_spectral_quadruples(ds, 20.0, 1e-12) >= 2 * n * n - n
    counts = [count_spectral_quadruples(ds, 20.0, d) for d in (1e-6, 1e-3, 1e-1, 1.0)]
    assert counts == sorted(counts)
    with pytest.raises(ValueError):
        count_spectral_quadruples(ds, 20.0, 0.0)
