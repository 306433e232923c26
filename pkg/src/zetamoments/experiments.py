"""Moment experiments: I_k(T), moments of J_k over [T, 2T], exceedance measures,
large values, and the pointwise short-interval inequality."""
from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .kernels import P4Coefficients, p4_eval
from .quadrature import (DEFAULT_QUADRATURE, QuadratureConfig, grid_sampler, integrate_power,
                         moment_cache, smoothed_on_grid, trapezoid_on_grid)
from .smoothed import trend_slope
from .zeta import abs2_array, abs_zeta_pow

EPS_PROXY = 0.05
I_K_GUARD = 1e5
SAMPLE_STEP = 0.05
V_MIN = 2.0  # stand-in for the V >= T^eps hypothesis

# smallest admissible exponent theta in G >= T^(theta + eps), keyed by (k, m)
THEOREM_ALPHA = {
    (1, 1): 0.0, (1, 2): 0.0, (1, 3): 1 / 7, (1, 4): 1 / 5,
    (2, 1): 0.5, (2, 2): 0.5, (2, 3): 4 / 7, (2, 4): 3 / 5,
}


def loglog_slope(T, ratio) -> float:
    """Least-squares slope of log(ratio) against log(T)."""
    ratio = np.asarray(ratio, dtype=np.float64)
    return trend_slope(np.log(np.asarray(T, dtype=np.float64)), np.log(ratio))


# -- I_k -----------------------------------------------------------------------

def i_k(T: float, k: int, cfg: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """int_0^T |zeta(1/2+it)|^2k dt from the shared cumulative cache."""
    if k not in (1, 2, 3, 4):
        raise ValueError(f"k must be in 1..4, got {k}")
    if T < 0:
        raise ValueError("T must be nonnegative")
    if k >= 2 and T > I_K_GUARD:
        raise ValueError(f"T={T:g} exceeds the runtime guard {I_K_GUARD:g} for k >= 2")
    if T == 0:
        return 0.0
    return moment_cache(cfg).integral(T, k)


@dataclass
class P4Calibration:
    coeffs: P4Coefficients
    T: np.ndarray
    residual: np.ndarray       # I_2(T) - T P4(log T)


def calibrate_p4(T_grid, base: P4Coefficients | None = None) -> P4Calibration:
    """Least-squares a2, a1, a0 with a4, a3 held fixed."""
    base = base or P4Coefficients.published_defaults()
    T = np.asarray(sorted(float(t) for t in T_grid))
    if T.size < 3:
        raise ValueError("need at least three heights to fit three coefficients")
    I2 = np.array([i_k(t, 2) for t in T])
    x = np.log(T)
    y = I2 / T - (base.a4 * x**4 + base.a3 * x**3)
    A = np.vstack([x**2, x, np.ones_like(x)]).T
    a2, a1, a0 = np.linalg.lstsq(A, y, rcond=None)[0]
    coeffs = P4Coefficients(base.a4, base.a3, float(a2), float(a1), float(a0))
    return P4Calibration(coeffs, T, I2 - T * p4_eval(coeffs, x))


def e2_residual(T: float, coeffs: P4Coefficients) -> float:
    return i_k(T, 2) - T * p4_eval(coeffs, math.log(T))


# -- moments of J_k ------------------------------------------------------------

@dataclass(frozen=True)
class MomentSweepConfig:
    k: int
    m: int
    T_grid: tuple
    theta: float
    quadrature: QuadratureConfig = DEFAULT_QUADRATURE
    step: float = SAMPLE_STEP

    def __post_init__(self):
        if self.k not in (1, 2, 3, 4):
            raise ValueError("k must be in 1..4")
        if self.m not in (1, 2, 3, 4):
            raise ValueError("m must be in 1..4")
        if not 0 < self.theta <= 1:
            raise ValueError("theta must lie in (0, 1]")
        if not self.T_grid or min(self.T_grid) < 10:
            raise ValueError("T_grid must be nonempty with every T >= 10")
        object.__setattr__(self, "T_grid", tuple(float(t) for t in self.T_grid))

    def G(self, T: float) -> float:
        return T**self.theta

    @property
    def in_theorem_range(self) -> bool:
        alpha = THEOREM_ALPHA.get((self.k, self.m))
        return alpha is not None and self.theta > alpha


@dataclass
class MomentRecord:
    T: float
    G: float
    k: int
    m: int
    theta: float
    integral: float
    ratio: float
    seconds: float


def _j_on_interval(T: float, G: float, k: int, step: float):
    """J_k on the sample grid covering [T, 2T] (one extra node each side)."""
    if G < 1:
        raise ValueError(f"G={G:g} < 1")
    return smoothed_on_grid(T - step, 2 * T + step, G, k, grid_sampler(step))


def moment_of_jk(cfg: MomentSweepConfig) -> list[MomentRecord]:
    """int_T^2T J_k(t, G)^m dt with G = T^theta for each T; ratio to T^(1 + 0.05).

    J_k is computed at every point of the step-0.05 grid by discrete convolution
    of cached |zeta|^2k samples with the Gaussian, then integrated by trapezoid.
    """
    out = []
    for T in cfg.T_grid:
        t0 = time.perf_counter()
        G = cfg.G(T)
        t, J = _j_on_interval(T, G, cfg.k, cfg.step)
        val = trapezoid_on_grid(t, J**cfg.m, T, 2 * T)
        out.append(MomentRecord(T, G, cfg.k, cfg.m, cfg.theta, val, val / T ** (1 + EPS_PROXY),
                                time.perf_counter() - t0))
    return out


def is_nonincreasing(values, rtol: float = 0.0) -> bool:
    v = list(values)
    return all(b <= a * (1 + rtol) for a, b in zip(v, v[1:]))


# -- exceedance ------------------------------------------------------------------

def _measure_above(t: np.ndarray, y: np.ndarray, U: float) -> float:
    """Length of {y >= U} for the piecewise-linear interpolant of (t, y)."""
    h = np.diff(t)
    y0, y1 = y[:-1], y[1:]
    lo, hi = np.minimum(y0, y1), np.maximum(y0, y1)
    frac = np.where(lo >= U, 1.0, np.where(hi < U, 0.0, (hi - U) / np.where(hi > lo, hi - lo, 1.0)))
    return float(np.dot(h, frac))


def _clip_to(t: np.ndarray, y: np.ndarray, a: float, b: float):
    inside = (t > a) & (t < b)
    tt = np.concatenate(([a], t[inside], [b]))
    yy = np.concatenate(([np.interp(a, t, y)], y[inside], [np.interp(b, t, y)]))
    return tt, yy


def exceedance_measure(T: float, G: float, k: int, U_grid, step: float = SAMPLE_STEP):
    """[(U, measure of {t in [T, 2T]: J_k(t, G) >= U})] from samples at ``step``."""
    t, J = _j_on_interval(T, G, k, step)
    tt, yy = _clip_to(t, J, T, 2 * T)
    return [(float(U), _measure_above(tt, yy, float(U))) for U in U_grid]


def exceedance_shape(T: float, G: float, k: int, m: int, U_grid, step: float = SAMPLE_STEP) -> dict:
    rows = exceedance_measure(T, G, k, U_grid, step)
    scaled = [(U, mu, mu * U**m / T ** (1 + EPS_PROXY)) for U, mu in rows]
    return {"T": T, "G": G, "k": k, "m": m, "rows": scaled,
            "fitted_C": max((s for _, _, s in scaled), default=0.0)}


# -- large values ----------------------------------------------------------------

@dataclass
class LargeValueRecord:
    T: float
    V: float
    R: int
    points: list

    def check(self) -> bool:
        """Replay both invariants: spacing >= 1 and |zeta| >= V at each point."""
        gaps_ok = all(b - a >= 1 for a, b in zip(self.points, self.points[1:]))
        vals_ok = all(abs_zeta_pow(t, 1) >= self.V * self.V for t in self.points)
        return gaps_ok and vals_ok and self.R == len(self.points)


_GOLDEN = (math.sqrt(5) - 1) / 2


def _refine_peaks(a: np.ndarray, b: np.ndarray, iters: int = 16):
    """Vectorized golden-section maximization of |zeta|^2 on [a_i, b_i]."""
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = abs2_array(c), abs2_array(d)
    for _ in range(iters):
        left = fc >= fd
        b = np.where(left, d, b)
        a = np.where(left, a, c)
        c_new = b - _GOLDEN * (b - a)
        d_new = a + _GOLDEN * (b - a)
        # reuse one interior value per interval
        c_eval = np.where(left, c_new, d)
        d_eval = np.where(left, c, d_new)
        need = np.where(left, c_eval, d_eval)
        fn = abs2_array(need)
        fc, fd = np.where(left, fn, fd), np.where(left, fc, fn)
        c, d = c_eval, d_eval
    x = 0.5 * (a + b)
    return x, abs2_array(x)


_PEAKS: dict[tuple[float, float], tuple[float, np.ndarray, np.ndarray]] = {}


def _peaks(T: float, step: float, floor: float):
    """Refined local maxima of |zeta|^2 on [T, 2T] whose sampled value is >= floor.

    Cached per (T, step); a later call with a higher floor reuses the work.
    """
    hit = _PEAKS.get((T, step))
    if hit is not None and hit[0] <= floor:
        keep = hit[2] >= floor
        return hit[1][keep], hit[2][keep]
    sampler = grid_sampler(step)
    i0, i1 = int(math.ceil(T / step)), int(math.floor(2 * T / step))
    y = sampler.values(i0 - 1, i1 + 2)
    idx = np.arange(i0 - 1, i1 + 2)
    mid = y[1:-1]
    peak = (mid >= y[:-2]) & (mid > y[2:]) & (mid >= floor)
    centers = idx[1:-1][peak] * step
    if centers.size:
        tx, fx = _refine_peaks(np.maximum(centers - step, T), np.minimum(centers + step, 2 * T))
    else:
        tx = fx = np.empty(0)
    _PEAKS[(T, step)] = (floor, tx, fx)
    return tx, fx


def large_value_points(T: float, V: float, step: float = SAMPLE_STEP) -> LargeValueRecord:
    """Greedy 1-spaced points in [T, 2T] with |zeta(1/2+it)| >= V.

    Local maxima of the step-0.05 samples whose value is within a factor 2 of
    V^2 are refined by golden section; then, left to right, a maximum is
    taken whenever it clears V and sits at least 1 past the last one taken.
    """
    if not V > 0:
        raise ValueError("V must be positive")
    if T < 10:
        raise ValueError("T must be >= 10")
    tx, fx = _peaks(float(T), step, 0.5 * V * V)
    points, last = [], -math.inf
    for t, f in zip(tx, fx):
        if f >= V * V and t - last >= 1:
            points.append(float(t))
            last = t
    return LargeValueRecord(T, V, len(points), points)


def group_points(points, G: float) -> list[tuple[float, list[float]]]:
    """Cover the intervals [t_r - 1/3, t_r + 1/3] by windows [tau - G, tau + G], greedily.

    Each window starts at the left end of the first interval not yet inside a
    window, so every interval lies inside its group's window. Consecutive
    windows overlap by less than 2/3, hence no t is in more than two of them.
    """
    groups = []
    i = 0
    pts = sorted(points)
    while i < len(pts):
        tau = pts[i] - 1 / 3 + G
        end = tau + G
        members = [pts[i]]  # with G < 1/3 the window cannot hold even this one
        i += 1
        while i < len(pts) and pts[i] + 1 / 3 <= end:
            members.append(pts[i])
            i += 1
        groups.append((tau, members))
    return groups


@dataclass
class Theorem4Row:
    V: float
    R: int
    S: int
    shape: float           # R V^2km / (T^1.05 G^(m-1))
    included: bool


@dataclass
class Theorem4Report:
    T: float
    k: int
    m: int
    alpha: float
    G: float
    rows: list[Theorem4Row]
    fitted_C: float
    implied_moment: float | None    # I_km(T)
    implied_exponent: float         # 1 + (m-1) alpha
    implied_ratio: float | None     # I_km(T) / T^(exponent + 0.05)
    flags: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def theorem4_pipeline(T: float, k: int, m: int, alpha: float, V_grid,
                      step: float = SAMPLE_STEP) -> Theorem4Report:
    """Large-value counts against R << T^(1+eps) G^(m-1) V^(-2km) with G = T^(alpha+0.05),
    and the moment bound it implies."""
    if (k, m) not in THEOREM_ALPHA:
        raise ValueError(f"(k, m) = ({k}, {m}) is outside the treated range")
    if alpha < THEOREM_ALPHA[(k, m)] - 1e-12 or alpha >= 1:
        raise ValueError(f"alpha={alpha} below the admissible {THEOREM_ALPHA[(k, m)]:.4g} for (k, m) = ({k}, {m})")
    G = T ** (alpha + EPS_PROXY)
    rows, flags = [], []
    for V in sorted(float(v) for v in V_grid):
        rec = large_value_points(T, V, step)
        S = len(group_points(rec.points, G))
        shape = rec.R * V ** (2 * k * m) / (T ** (1 + EPS_PROXY) * G ** (m - 1))
        ok = V >= V_MIN
        if not ok:
            flags.append(f"V={V:g} below {V_MIN:g}: excluded from the fit")
        rows.append(Theorem4Row(V, rec.R, S, shape, ok))
    used = [r.shape for r in rows if r.included]
    exponent = 1 + (m - 1) * alpha
    km = k * m
    moment = ratio = None
    if km <= 4 and T <= I_K_GUARD:
        moment = i_k(T, km)
        ratio = moment / T ** (exponent + EPS_PROXY)
    else:
        flags.append(f"I_{km}(T) not computed (power or height beyond the quadrature range)")
    return Theorem4Report(T, k, m, alpha, G, rows, max(used, default=0.0), moment, exponent, ratio, flags)


def theorem4_sweep(T_grid, k: int, m: int, alpha: float, V_grid) -> dict:
    reports = [theorem4_pipeline(T, k, m, alpha, V_grid) for T in T_grid]
    T = [r.T for r in reports if r.implied_ratio is not None]
    ratio = [r.implied_ratio for r in reports if r.implied_ratio is not None]
    return {"k": k, "m": m, "alpha": alpha, "reports": [r.as_dict() for r in reports],
            "implied_ratios": ratio, "loglog_slope": loglog_slope(T, ratio) if len(T) > 1 else 0.0,
            "fitted_C": max(r.fitted_C for r in reports)}


# -- pointwise inequality -------------------------------------------------------

@dataclass
class ConvexityRow:
    t: float
    lhs: float            # |zeta(1/2+it)|^k
    local_integral: float  # int_{t-1/3}^{t+1/3} |zeta|^k
    C_needed: float


def pointwise_convexity_check(t_grid, k: int) -> dict:
    """Smallest C with |zeta(1/2+it)|^k <= C (log t * int_{t-1/3}^{t+1/3} |zeta|^k + 1)."""
    if k not in (1, 2):
        raise ValueError("k must be 1 or 2")
    rows = []
    for t in sorted(float(x) for x in t_grid):
        if t < 10:
            raise ValueError("grid points must be >= 10")
        lhs = abs_zeta_pow(t, 1) ** (k / 2)
        loc = integrate_power(t - 1 / 3, t + 1 / 3, 1, integrand=lambda x: abs2_array(x) ** (k / 2))
        rows.append(ConvexityRow(t, lhs, loc, lhs / (math.log(t) * loc + 1)))
    C = max((r.C_needed for r in rows), default=0.0)
    return {"k": k, "rows": rows, "fitted_C": C}
