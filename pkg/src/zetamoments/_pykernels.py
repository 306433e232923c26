"""Pure numpy versions of the compiled kernels in ``_ckernels.pyx``.

Same signatures and the same results up to floating-point summation order.
"""
from __future__ import annotations

import numpy as np

_CHUNK_ELEMENTS = 1 << 21


def _theta(t: np.ndarray) -> np.ndarray:
    r = 1.0 / t
    r2 = r * r
    tail = r * (1 / 48 + r2 * (7 / 5760 + r2 * (31 / 80640 + r2 * (127 / 430080 + r2 * (511 / 1216512)))))
    return 0.5 * t * np.log(t / (2 * np.pi)) - 0.5 * t - np.pi / 8 + tail


def rs_hardy_z(t, coeffs, degrees, num_threads=1):
    t = np.ascontiguousarray(t, dtype=np.float64)
    a = np.sqrt(t / (2 * np.pi))
    n = np.floor(a).astype(np.int64)
    z = a - n - 0.5
    th = _theta(t)

    main = np.zeros_like(t)
    order = np.argsort(n, kind="stable")
    ns = n[order]
    bounds = np.flatnonzero(np.diff(ns)) + 1
    starts = np.concatenate(([0], bounds))
    stops = np.concatenate((bounds, [len(ns)]))
    for lo, hi in zip(starts, stops):
        nn = int(ns[lo])
        if nn == 0:
            continue
        logn = np.log(np.arange(1, nn + 1, dtype=np.float64))
        rsq = 2.0 / np.sqrt(np.arange(1, nn + 1, dtype=np.float64))
        step = max(1, _CHUNK_ELEMENTS // nn)
        for c0 in range(lo, hi, step):
            idx = order[c0:min(hi, c0 + step)]
            phase = th[idx, None] - t[idx, None] * logn[None, :]
            main[idx] = np.cos(phase) @ rsq

    rem = np.zeros_like(t)
    ainv = 1.0 / a
    apow = np.ones_like(t)
    for j in range(coeffs.shape[0]):
        poly = np.polynomial.polynomial.polyval(z, coeffs[j, : degrees[j] + 1])
        rem += poly * apow
        apow *= ainv
    sign = np.where(n % 2 == 1, 1.0, -1.0)
    return main + sign * rem / np.sqrt(a), th


def divisor_counts(limit):
    d = np.zeros(limit + 1, dtype=np.int32)
    if limit < 1:
        return d
    # Smallest-prime-factor table by sieving, then d(n) = d(m) * (e+1)/e with
    # n = p * m, p the smallest prime factor and e its exponent in n.
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, int(limit**0.5) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    ar = np.arange(limit + 1, dtype=np.int32)
    primes = spf == 0
    spf[primes] = ar[primes]
    expo = np.zeros(limit + 1, dtype=np.int32)
    d[1] = 1
    for n in range(2, limit + 1):
        p = spf[n]
        m = n // p
        if spf[m] == p:
            expo[n] = expo[m] + 1
            d[n] = d[m] // expo[n] * (expo[n] + 1)
        else:
            expo[n] = 1
            d[n] = d[m] * 2
    return d


def weighted_close_pairs(s, w, x):
    if x <= 0.0 or len(s) == 0:
        return 0
    s = np.asarray(s, dtype=np.float64)
    w = np.asarray(w, dtype=np.int64)
    idx = np.arange(len(s))
    hi = np.maximum(np.searchsorted(s, s + x, side="left"), idx + 1)
    csum = np.concatenate(([0], np.cumsum(w)))
    return int(np.dot(w, csum[hi] - csum[idx + 1]))


def rs_hardy_z_grid(t0, h, npts, coeffs, degrees, num_threads=1):
    t = t0 + h * np.arange(npts, dtype=np.float64)
    return rs_hardy_z(t, coeffs, degrees, num_threads)
