"""Gaussian-smoothed local moments J_k(t, G) and the explicit series for J_1."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .kernels import DivisorTable, arsinh, atkinson_f, build_divisor_table
from .quadrature import (DEFAULT_QUADRATURE, GAUSS_TAIL_TOL, QuadratureConfig,
                         _integrate_uniform_panels, gaussian_half_width)
from .zeta import abs2_grid

METHODS = ("quadrature", "series29", "series28", "spectral")
SMOOTHED_COLUMNS = ("k", "t", "G", "method", "value", "truncation", "residual_vs_quadrature")
SERIES28_TAIL = 1e-16


@dataclass(frozen=True)
class SmoothedMoment:
    k: int
    t: float
    G: float
    value: float
    method: str
    truncation: int = 0
    reflected: bool = False

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")


def _check_quadrature_args(t: float, G: float, k: int) -> None:
    if t < 10:
        raise ValueError(f"t must be >= 10, got {t}")
    if G < 1:
        raise ValueError(f"G must be >= 1, got {G}")
    if k not in (1, 2, 3, 4):
        raise ValueError(f"k must be in 1..4, got {k}")


def jk_quadrature(t: float, G: float, k: int, integrand=None,
                  cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> SmoothedMoment:
    """J_k(t, G) = (sqrt(pi) G)^-1 int |zeta(1/2 + i(t+u))|^2k exp(-(u/G)^2) du.

    The window is |u| <= G sqrt(ln 1e12). Heights below zero are folded back
    with |zeta(1/2 - iu)| = |zeta(1/2 + iu)|, and the record says so.
    ``integrand(x)`` replaces |zeta(1/2+ix)|^2k when given.
    """
    t, G = float(t), float(G)
    _check_quadrature_args(t, G, k)
    W = gaussian_half_width(G, GAUSS_TAIL_TOL)
    a, b = t - W, t + W
    q = int(cfg.panels_per_unit(b + 1.0))
    panels = int(math.ceil((b - a) * q))
    width = (b - a) / panels
    norm = 1.0 / (math.sqrt(math.pi) * G)

    def evaluate(t0, h, n):
        x = t0 + h * np.arange(n)
        if integrand is None:
            f = abs2_grid(t0, h, n) ** k
        else:
            f = np.asarray(integrand(x), dtype=np.float64)
        return f * np.exp(-(((x - t) / G) ** 2))

    value = norm * math.fsum(_integrate_uniform_panels(evaluate, a, panels, width, cfg))
    return SmoothedMoment(k, t, G, max(value, 0.0), "quadrature", 0, a < 0)


def series29_cutoff(t: float, G: float) -> int:
    """Smallest admissible cutoff: ceil(t G^-2 log t)."""
    return max(1, int(math.ceil(t * math.log(t) / (G * G))))


def _alternating(n: np.ndarray) -> np.ndarray:
    # (-1)^(n+1): the overall sign that makes both series agree with the
    # derivative of Atkinson's sum and with direct quadrature
    return np.where(n % 2 == 0, -1.0, 1.0)


def series29_terms(t: float, G: float, n: np.ndarray, d: np.ndarray) -> np.ndarray:
    n = n.astype(np.float64)
    sign = _alternating(n)
    saddle = np.sqrt(t / (2 * math.pi * n) + 0.25) - 0.5
    damp = np.exp(-(G * arsinh(np.sqrt(math.pi * n / (2 * t)))) ** 2)
    return math.sqrt(2.0) * sign * d * n**-0.5 * saddle**-0.5 * damp * np.sin(atkinson_f(t, n))


def j1_series29(t: float, G: float, dtab: DivisorTable | None = None,
                cutoff: int | None = None) -> SmoothedMoment:
    """Oscillatory part of the explicit formula for J_1(t, G), valid for t^eps <= G <= t.

    The bounded-by-log offset of the formula is not included.
    """
    t, G = float(t), float(G)
    if t < 10 or G <= 0:
        raise ValueError("need t >= 10 and G > 0")
    need = series29_cutoff(t, G)
    cutoff = need if cutoff is None else int(cutoff)
    if cutoff < need:
        raise ValueError(f"cutoff {cutoff} below the required t G^-2 log t = {need}")
    if dtab is None:
        dtab = build_divisor_table(cutoff)
    if cutoff > dtab.limit:
        raise ValueError(f"cutoff {cutoff} exceeds the divisor table limit {dtab.limit}")
    n = np.arange(1, cutoff + 1)
    value = math.fsum(series29_terms(t, G, n, dtab.upto(cutoff)))
    return SmoothedMoment(1, t, G, value, "series29", cutoff)


def series28_window(t: float) -> tuple[float, float]:
    return t**0.25, t / math.log(t)


def series28_cutoff(t: float, G: float, tail: float = SERIES28_TAIL) -> int:
    """First n with exp(-pi n G^2 / 2t) < tail."""
    return int(math.floor(2 * t * math.log(1 / tail) / (math.pi * G * G))) + 1


def series28_terms(t: float, G: float, n: np.ndarray, d: np.ndarray) -> np.ndarray:
    n = n.astype(np.float64)
    sign = _alternating(n)
    pref = 2**0.75 * math.pi**0.25 * t**-0.25
    return pref * sign * d * n**-0.25 * np.sin(atkinson_f(t, n)) * np.exp(-math.pi * n * G * G / (2 * t))


def j1_series28(t: float, G: float, dtab: DivisorTable | None = None,
                cutoff: int | None = None) -> SmoothedMoment:
    """Oscillatory part of the classical smoothed formula, valid for t^(1/4) <= G <= t/log t."""
    t, G = float(t), float(G)
    if t < 10:
        raise ValueError("need t >= 10")
    lo, hi = series28_window(t)
    # small slack so G = t**0.25 computed in floating point is accepted
    if not lo * (1 - 1e-12) <= G <= hi * (1 + 1e-12):
        raise ValueError(f"G={G} outside [t^(1/4), t/log t] = [{lo:.6g}, {hi:.6g}]")
    cutoff = series28_cutoff(t, G) if cutoff is None else int(cutoff)
    if dtab is None:
        dtab = build_divisor_table(cutoff)
    if cutoff > dtab.limit:
        raise ValueError(f"cutoff {cutoff} exceeds the divisor table limit {dtab.limit}")
    n = np.arange(1, cutoff + 1)
    value = math.fsum(series28_terms(t, G, n, dtab.upto(cutoff)))
    return SmoothedMoment(1, t, G, value, "series28", cutoff)


@dataclass(frozen=True)
class SmoothedRow:
    k: int
    t: float
    G: float
    method: str
    value: float
    truncation: int
    residual_vs_quadrature: float


@dataclass
class ResidualSweep:
    rows: list[SmoothedRow]
    reference: str
    other: str
    residuals: np.ndarray      # reference minus other, per grid point
    fitted_C: float            # max |residual| / log t
    trend_slope: float         # slope of |residual| / log t against log t

    def as_rows(self) -> list[dict]:
        return [asdict(r) for r in self.rows]


def _evaluate(method: str, t: float, G: float, k: int, dtab: DivisorTable) -> SmoothedMoment:
    if method == "quadrature":
        return jk_quadrature(t, G, k)
    if k != 1:
        raise ValueError(f"method {method} only exists for k = 1")
    if method == "series29":
        return j1_series29(t, G, dtab)
    if method == "series28":
        return j1_series28(t, G, dtab)
    raise ValueError(f"unknown method {method!r}")


def _table_limit(grid, methods) -> int:
    need = 1
    for t, G, _ in grid:
        if "series29" in methods:
            need = max(need, series29_cutoff(t, G))
        if "series28" in methods:
            need = max(need, series28_cutoff(t, G))
    return need


def trend_slope(x, y) -> float:
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size < 2 or np.ptp(x) == 0:
        return 0.0
    return float(np.polyfit(x, y, 1)[0])


def j_residual_sweep(grid, methods=("quadrature", "series29"),
                     dtab: DivisorTable | None = None) -> ResidualSweep:
    """Evaluate two methods on each (t, G, k) and report signed residuals.

    The fitted constant is max |residual| / log t over the grid; the slope of
    |residual| / log t against log t shows whether it drifts.
    """
    grid = [(float(t), float(G), int(k)) for t, G, k in grid]
    if not grid:
        raise ValueError("grid must be nonempty")
    ref, other = methods
    if dtab is None and ({ref, other} - {"quadrature"}):
        dtab = build_divisor_table(_table_limit(grid, methods))
    rows, res = [], []
    for t, G, k in grid:
        a = _evaluate(ref, t, G, k, dtab)
        b = a if other == ref else _evaluate(other, t, G, k, dtab)
        quad = a.value if ref == "quadrature" else None
        for rec in (a, b) if other != ref else (a,):
            resid = (quad - rec.value) if quad is not None else float("nan")
            rows.append(SmoothedRow(k, t, G, rec.method, rec.value, rec.truncation, resid))
        res.append(a.value - b.value)
    res = np.array(res)
    logs = np.log([t for t, _, _ in grid])
    scaled = np.abs(res) / logs
    return ResidualSweep(rows, ref, other, res, float(scaled.max()), trend_slope(logs, scaled))
