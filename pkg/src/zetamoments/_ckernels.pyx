# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. ``_pykernels`` holds the numpy equivalents."""

import numpy as np
cimport numpy as cnp
from cython.parallel cimport prange
from libc.math cimport cos, sin, log, sqrt, floor, M_PI
from libc.stdlib cimport malloc, free

cnp.import_array()

DEF ANCHOR = 256  # grid steps between exact re-evaluations of n^(-it)


cdef inline double _theta(double t) noexcept nogil:
    cdef double r = 1.0 / t
    cdef double r2 = r * r
    return (0.5 * t * log(t / (2.0 * M_PI)) - 0.5 * t - M_PI / 8.0
            + r * (1.0 / 48.0 + r2 * (7.0 / 5760.0 + r2 * (31.0 / 80640.0
            + r2 * (127.0 / 430080.0 + r2 * (511.0 / 1216512.0))))))


cdef inline double _remainder(double a, double[:, ::1] coeffs, long[::1] degrees) noexcept nogil:
    cdef Py_ssize_t j, d
    cdef long n = <long>floor(a)
    cdef double z = a - n - 0.5
    cdef double ainv = 1.0 / a
    cdef double apow = 1.0
    cdef double cj = 0.0
    cdef double poly
    for j in range(coeffs.shape[0]):
        d = degrees[j]
        poly = coeffs[j, d]
        while d > 0:
            d = d - 1
            poly = poly * z + coeffs[j, d]
        cj = cj + poly * apow
        apow = apow * ainv
    if n % 2 == 1:
        return cj / sqrt(a)
    return -cj / sqrt(a)


def rs_hardy_z(double[::1] t, double[:, ::1] coeffs, long[::1] degrees,
               int num_threads=1):
    """Hardy Z(t) and theta(t) for t >= 10 by Riemann-Siegel.

    ``coeffs[j, :degrees[j] + 1]`` are the Taylor coefficients of C_j in p - 1/2.
    """
    cdef Py_ssize_t npts = t.shape[0]
    cdef Py_ssize_t i, j
    cdef long n, nmax
    cdef double tt, a, th, acc

    z_out = np.empty(npts, dtype=np.float64)
    th_out = np.empty(npts, dtype=np.float64)
    cdef double[::1] zv = z_out
    cdef double[::1] thv = th_out

    nmax = 1
    for i in range(npts):
        n = <long>floor(sqrt(t[i] / (2.0 * M_PI)))
        if n > nmax:
            nmax = n
    logn_arr = np.log(np.arange(1, nmax + 1, dtype=np.float64))
    rsq_arr = 2.0 / np.sqrt(np.arange(1, nmax + 1, dtype=np.float64))
    cdef double[::1] logn = logn_arr
    cdef double[::1] rsq = rsq_arr

    for i in prange(npts, nogil=True, num_threads=num_threads, schedule="static"):
        tt = t[i]
        a = sqrt(tt / (2.0 * M_PI))
        n = <long>floor(a)
        th = _theta(tt)
        acc = 0.0
        for j in range(n):
            acc = acc + rsq[j] * cos(th - tt * logn[j])
        zv[i] = acc + _remainder(a, coeffs, degrees)
        thv[i] = th
    return z_out, th_out


def rs_hardy_z_grid(double t0, double h, Py_ssize_t npts, double[:, ::1] coeffs,
                    long[::1] degrees, int num_threads=1):
    """Z and theta at t0 + i*h, i < npts, all points >= 10.

    The terms n^(-1/2 - it) are advanced by the fixed rotation n^(-ih) and
    recomputed exactly every ANCHOR steps.
    """
    cdef Py_ssize_t nchunks = (npts + ANCHOR - 1) // ANCHOR
    cdef Py_ssize_t c, i, i0, i1, j
    cdef long n, nmax
    cdef double tt, a, th, ph, sr, si, xr, xi, lg
    cdef double *cur_r
    cdef double *cur_i
    cdef double *rot_r
    cdef double *rot_i

    z_out = np.empty(npts, dtype=np.float64)
    th_out = np.empty(npts, dtype=np.float64)
    cdef double[::1] zv = z_out
    cdef double[::1] thv = th_out

    for c in prange(nchunks, nogil=True, num_threads=num_threads, schedule="static"):
        i0 = c * ANCHOR
        i1 = i0 + ANCHOR
        if i1 > npts:
            i1 = npts
        nmax = <long>floor(sqrt((t0 + (i1 - 1) * h) / (2.0 * M_PI)))
        cur_r = <double *>malloc(4 * (nmax + 1) * sizeof(double))
        cur_i = cur_r + (nmax + 1)
        rot_r = cur_i + (nmax + 1)
        rot_i = rot_r + (nmax + 1)
        tt = t0 + i0 * h
        for j in range(nmax):
            lg = log(<double>(j + 1))
            ph = -tt * lg
            cur_r[j] = 2.0 * cos(ph) / sqrt(<double>(j + 1))
            cur_i[j] = 2.0 * sin(ph) / sqrt(<double>(j + 1))
            rot_r[j] = cos(h * lg)
            rot_i[j] = -sin(h * lg)
        for i in range(i0, i1):
            tt = t0 + i * h
            a = sqrt(tt / (2.0 * M_PI))
            n = <long>floor(a)
            sr = 0.0
            si = 0.0
            for j in range(n):
                sr = sr + cur_r[j]
                si = si + cur_i[j]
            for j in range(nmax):
                xr = cur_r[j] * rot_r[j] - cur_i[j] * rot_i[j]
                xi = cur_r[j] * rot_i[j] + cur_i[j] * rot_r[j]
                cur_r[j] = xr
                cur_i[j] = xi
            th = _theta(tt)
            zv[i] = cos(th) * sr - sin(th) * si + _remainder(a, coeffs, degrees)
            thv[i] = th
        free(cur_r)
    return z_out, th_out


def divisor_counts(long limit):
    """d(n) for 0 <= n <= limit (entry 0 is 0) by a linear sieve."""
    counts_arr = np.zeros(limit + 1, dtype=np.int32)
    expo_arr = np.zeros(limit + 1, dtype=np.uint8)
    primes_arr = np.empty(max(16, limit // 2 + 1), dtype=np.int64)
    cdef int[::1] d = counts_arr
    cdef unsigned char[::1] e = expo_arr
    cdef long[::1] primes = primes_arr
    cdef long nprimes = 0
    cdef long i, j, p, ip
    if limit >= 1:
        d[1] = 1
    for i in range(2, limit + 1):
        if d[i] == 0:
            d[i] = 2
            e[i] = 1
            primes[nprimes] = i
            nprimes += 1
        for j in range(nprimes):
            p = primes[j]
            ip = i * p
            if ip > limit:
                break
            if i % p == 0:
                e[ip] = e[i] + 1
                d[ip] = d[i] // (e[i] + 1) * (e[i] + 2)
                break
            e[ip] = 1
            d[ip] = d[i] * 2
    return counts_arr


def weighted_close_pairs(double[::1] s, long[::1] w, double x):
    """Sum of w[p] * w[q] over p < q with s[q] < s[p] + x; ``s`` sorted ascending."""
    cdef Py_ssize_t n = s.shape[0]
    cdef Py_ssize_t p, q = 0
    cdef long long total = 0, window = 0
    if x <= 0.0:
        return 0
    # window = sum of w over (p, q)
    for p in range(n):
        if q < p + 1:
            q = p + 1
            window = 0
        elif p > 0:
            window -= w[p]
        while q < n and s[q] < s[p] + x:
            window += w[q]
            q += 1
        total += w[p] * window
    return total
