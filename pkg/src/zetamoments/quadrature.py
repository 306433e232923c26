"""Quadrature of |zeta(1/2+it)|^(2k) and the uniform-grid sample cache.

Panels: each unit interval [j, j+1] is split into q(j) equal panels,
q(j) = ceil(1 / min(w_cap, w_scale / log(j+1))), with an 8-node Gauss-Legendre
rule per panel. The panel width therefore never exceeds min(0.25, 1.5/log t),
well under the local zero spacing 2 pi / log(t / 2 pi). Consecutive unit
intervals with the same q form one long arithmetic progression per node index,
which is what the rotation kernel wants.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from scipy.signal import fftconvolve

from .zeta import abs2_grid

MAX_POWER = 4


class QuadratureError(RuntimeError):
    def __init__(self, message: str, estimate: float):
        super().__init__(f"{message} (achieved error estimate {estimate:.3e})")
        self.estimate = estimate


@dataclass(frozen=True)
class QuadratureConfig:
    nodes: int = 8
    width_cap: float = 0.25
    width_scale: float = 1.5
    tol: float = 1e-3

    def panels_per_unit(self, t_right):
        """Panels in a unit interval whose right end is ``t_right``."""
        logt = np.log(np.maximum(np.asarray(t_right, dtype=np.float64), math.e))
        width = np.minimum(self.width_cap, self.width_scale / logt)
        return np.ceil(1.0 / width - 1e-12).astype(np.int64)

    def gauss(self) -> tuple[np.ndarray, np.ndarray]:
        return np.polynomial.legendre.leggauss(self.nodes)


DEFAULT_QUADRATURE = QuadratureConfig()


def _integrate_uniform_panels(evaluate, a: float, panels: int, width: float,
                              cfg: QuadratureConfig) -> np.ndarray:
    """Per-panel GL integrals over [a, a + panels*width]; ``evaluate(t0, h, n)``
    returns the integrand on an arithmetic progression."""
    x, w = cfg.gauss()
    acc = np.zeros(panels)
    for xk, wk in zip(x, w):
        acc += wk * evaluate(a + 0.5 * (xk + 1.0) * width, width, panels)
    return acc * (0.5 * width)


def _power_stack(abs2: np.ndarray) -> np.ndarray:
    out = np.empty((MAX_POWER, abs2.size))
    out[0] = abs2
    for k in range(1, MAX_POWER):
        out[k] = out[k - 1] * abs2
    return out


def integrate_power(a: float, b: float, k: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE,
                    integrand=None) -> float:
    """Integral of |zeta(1/2+it)|^(2k) (or ``integrand(t)``) over [a, b].

    The panel width follows the largest |t| in the interval.
    """
    if b < a:
        return -integrate_power(b, a, k, cfg, integrand)
    if b == a:
        return 0.0
    top = max(abs(a), abs(b)) + 1.0
    panels = int(math.ceil((b - a) * int(cfg.panels_per_unit(top))))
    width = (b - a) / panels
    if integrand is None:
        evaluate = lambda t0, h, n: abs2_grid(t0, h, n) ** k
    else:
        evaluate = lambda t0, h, n: np.asarray(integrand(t0 + h * np.arange(n)), dtype=np.float64)
    return math.fsum(_integrate_uniform_panels(evaluate, a, panels, width, cfg))


class MomentCache:
    """Cumulative integrals of |zeta|^2, |zeta|^4, |zeta|^6, |zeta|^8 from 0.

    Unit-interval integrals are computed once and kept; the cache only ever
    extends to the right, so sweeps over increasing T reuse all earlier work.
    """

    def __init__(self, cfg: QuadratureConfig = DEFAULT_QUADRATURE):
        self.cfg = cfg
        self._blocks = np.zeros((MAX_POWER, 0))
        self._cumulative = np.zeros((MAX_POWER, 1))
        self._lock = threading.Lock()

    @property
    def extent(self) -> int:
        return self._blocks.shape[1]

    def _compute_blocks(self, j0: int, j1: int) -> np.ndarray:
        q = self.cfg.panels_per_unit(np.arange(j0, j1) + 1.0)
        out = np.empty((MAX_POWER, j1 - j0))
        edges = np.flatnonzero(np.diff(q)) + 1
        starts = np.concatenate(([0], edges))
        stops = np.concatenate((edges, [len(q)]))
        x, w = self.cfg.gauss()
        for s0, s1 in zip(starts, stops):
            qq = int(q[s0])
            npanels = (s1 - s0) * qq
            width = 1.0 / qq
            acc = np.zeros((MAX_POWER, npanels))
            for xk, wk in zip(x, w):
                vals = abs2_grid(j0 + s0 + 0.5 * (xk + 1.0) * width, width, npanels)
                acc += wk * _power_stack(vals)
            acc *= 0.5 * width
            out[:, s0:s1] = acc.reshape(MAX_POWER, s1 - s0, qq).sum(axis=2)
        return out

    def ensure(self, upto: int) -> None:
        """Make unit intervals [0, upto) available."""
        with self._lock:
            have = self.extent
            if upto <= have:
                return
            target = max(upto, int(have * 1.25))
            new = self._compute_blocks(have, target)
            self._blocks = np.concatenate((self._blocks, new), axis=1)
            self._cumulative = np.concatenate(
                (np.zeros((MAX_POWER, 1)), np.cumsum(self._blocks, axis=1)), axis=1)

    def integral(self, T: float, k: int) -> float:
        """Integral of |zeta(1/2+it)|^(2k) over [0, T]."""
        if not 1 <= k <= MAX_POWER:
            raise ValueError(f"k must be in 1..{MAX_POWER}")
        if T < 0:
            raise ValueError("T must be nonnegative")
        j = int(math.floor(T))
        self.ensure(j + 1)
        full = self._cumulative[k - 1, j]
        frac = T - j
        if frac == 0.0:
            return float(full)
        q = int(self.cfg.panels_per_unit(j + 1.0))
        panels = max(1, int(math.ceil(frac * q)))
        part = _integrate_uniform_panels(lambda t0, h, n: abs2_grid(t0, h, n) ** k,
                                         float(j), panels, frac / panels, self.cfg)
        return float(full + math.fsum(part))

    def error_estimate(self, T: float, k: int) -> float:
        """Error estimate for ``integral(T, k)``: the last unit interval redone
        with twice the panels, scaled by the number of unit intervals."""
        j = max(0, int(math.floor(T)) - 1)
        self.ensure(j + 1)
        q = int(self.cfg.panels_per_unit(j + 1.0))
        fine = _integrate_uniform_panels(lambda t0, h, n: abs2_grid(t0, h, n) ** k,
                                         float(j), 2 * q, 0.5 / q, self.cfg)
        return abs(math.fsum(fine) - self._blocks[k - 1, j]) * max(1.0, T)


_CACHES: dict[QuadratureConfig, MomentCache] = {}


def moment_cache(cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> MomentCache:
    cache = _CACHES.get(cfg)
    if cache is None:
        cache = _CACHES.setdefault(cfg, MomentCache(cfg))
    return cache


class GridSampler:
    """|zeta(1/2+it)|^2 on the global grid t = i * step, cached in chunks."""

    CHUNK = 1 << 16

    def __init__(self, step: float = 0.05):
        self.step = step
        self._chunks: dict[int, np.ndarray] = {}
        self._lock = threading.Lock()

    def _chunk(self, c: int) -> np.ndarray:
        arr = self._chunks.get(c)
        if arr is None:
            i0 = c * self.CHUNK
            if i0 >= 0:
                arr = abs2_grid(i0 * self.step, self.step, self.CHUNK)
            else:  # |zeta| is even in t
                arr = abs2_grid(-(i0 + self.CHUNK - 1) * self.step, self.step, self.CHUNK)[::-1].copy()
            with self._lock:
                self._chunks.setdefault(c, arr)
        return arr

    def values(self, i0: int, i1: int) -> np.ndarray:
        """Samples for indices i0 <= i < i1."""
        c0, c1 = i0 // self.CHUNK, (i1 - 1) // self.CHUNK
        parts = [self._chunk(c) for c in range(c0, c1 + 1)]
        flat = np.concatenate(parts) if len(parts) > 1 else parts[0]
        off = i0 - c0 * self.CHUNK
        return flat[off : off + (i1 - i0)]

    def clear(self) -> None:
        with self._lock:
            self._chunks.clear()


_SAMPLERS: dict[float, GridSampler] = {}


def grid_sampler(step: float = 0.05) -> GridSampler:
    s = _SAMPLERS.get(step)
    if s is None:
        s = _SAMPLERS.setdefault(step, GridSampler(step))
    return s


GAUSS_TAIL_TOL = 1e-12


def gaussian_half_width(G: float, tol: float = GAUSS_TAIL_TOL) -> float:
    """Window half-width beyond which exp(-(u/G)^2) < tol."""
    return G * math.sqrt(math.log(1.0 / tol))


def smoothed_on_grid(t_lo: float, t_hi: float, G: float, k: int,
                     sampler: GridSampler | None = None) -> tuple[np.ndarray, np.ndarray]:
    """J_k(t, G) at every grid point t in [t_lo, t_hi].

    Trapezoid (equivalently, plain sum) against the truncated Gaussian; the
    integrand is band-limited far below the grid's Nyquist rate, so the rule
    is spectrally accurate.
    """
    sampler = sampler or grid_sampler()
    h = sampler.step
    i_lo = int(math.ceil(t_lo / h - 1e-9))
    i_hi = int(math.floor(t_hi / h + 1e-9))
    m = int(math.ceil(gaussian_half_width(G) / h))
    f = sampler.values(i_lo - m, i_hi + m + 1) ** k
    u = h * np.arange(-m, m + 1)
    kern = np.exp(-((u / G) ** 2)) * (h / (math.sqrt(math.pi) * G))
    J = fftconvolve(f, kern, mode="valid")
    t = h * np.arange(i_lo, i_hi + 1)
    return t, np.maximum(J, 0.0)


def trapezoid_on_grid(t: np.ndarray, y: np.ndarray, a: float, b: float) -> float:
    """Integral over [a, b] of data sampled on a uniform grid covering [a, b]."""
    h = t[1] - t[0]
    inside = (t >= a - 1e-9) & (t <= b + 1e-9)
    ti, yi = t[inside], y[inside]
    total = h * (yi.sum() - 0.5 * (yi[0] + yi[-1]))
    # linear pieces for [a, ti[0]] and [ti[-1], b] when a, b are off-grid
    if ti[0] - a > 1e-9:
        ya = np.interp(a, t, y)
        total += 0.5 * (ti[0] - a) * (ya + yi[0])
    if b - ti[-1] > 1e-9:
        yb = np.interp(b, t, y)
        total += 0.5 * (b - ti[-1]) * (yb + yi[-1])
    return float(total)
