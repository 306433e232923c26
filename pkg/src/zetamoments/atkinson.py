"""E(T), the mean-square error term, by direct quadrature and by Atkinson's formula."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .kernels import EULER_GAMMA, DivisorTable, atkinson_e, atkinson_f, atkinson_nprime, build_divisor_table
from .quadrature import DEFAULT_QUADRATURE, QuadratureConfig, QuadratureError, integrate_power, moment_cache

# admissible window A T < N < A' T
WINDOW_LOW = 0.5
WINDOW_HIGH = 2.0

ET_COLUMNS = ("T", "e_direct", "e_atkinson", "sigma1", "sigma2", "residual")


@dataclass(frozen=True)
class AtkinsonParams:
    T: float
    N: float
    Nprime: float

    @classmethod
    def build(cls, T: float, N: float | None = None,
              low: float = WINDOW_LOW, high: float = WINDOW_HIGH) -> "AtkinsonParams":
        if T <= 0:
            raise ValueError("T must be positive")
        N = float(T if N is None else N)
        if not low * T < N < high * T:
            raise ValueError(f"N={N} outside ({low}T, {high}T) for T={T}")
        return cls(float(T), N, atkinson_nprime(T, N))


@dataclass(frozen=True)
class ETRecord:
    T: float
    e_direct: float
    e_atkinson: float
    sigma1: float
    sigma2: float
    residual: float

    def as_row(self) -> dict:
        return asdict(self)


def mean_square_main_term(T: float) -> float:
    return T * math.log(T / (2 * math.pi)) + (2 * EULER_GAMMA - 1) * T


def e_direct(T: float, step_control: QuadratureConfig = DEFAULT_QUADRATURE, integrand=None) -> float:
    """E(T) = int_0^T |zeta(1/2+it)|^2 dt - T log(T/2pi) - (2 gamma - 1) T.

    ``integrand`` replaces |zeta|^2 (test hook; bypasses the cache).
    """
    if T < 10:
        raise ValueError("e_direct needs T >= 10")
    if integrand is not None:
        total = integrate_power(0.0, T, 1, step_control, integrand=integrand)
    else:
        cache = moment_cache(step_control)
        total = cache.integral(T, 1)
        est = cache.error_estimate(T, 1)
        if est > step_control.tol:
            raise QuadratureError(f"quadrature of |zeta|^2 on [0, {T}] did not reach tol {step_control.tol}", est)
    return total - mean_square_main_term(T)


def _check_table(dtab: DivisorTable, n: int) -> None:
    if n > dtab.limit:
        raise ValueError(f"divisor table limit {dtab.limit} is below the needed {n}")


def sigma1_terms(T: float, N: float, dtab: DivisorTable) -> np.ndarray:
    n_max = int(math.floor(N))
    if n_max < 1:
        return np.zeros(0)
    _check_table(dtab, n_max)
    n = np.arange(1, n_max + 1, dtype=np.float64)
    sign = np.where(n % 2 == 0, 1.0, -1.0)
    d = dtab.upto(n_max)
    terms = sign * d * n**-0.75 * atkinson_e(T, n) * np.cos(atkinson_f(T, n))
    return math.sqrt(2.0) * (T / (2 * math.pi)) ** 0.25 * terms


def sigma1(T: float, N: float, dtab: DivisorTable) -> float:
    """2^(1/2) (T/2pi)^(1/4) sum_{n<=N} (-1)^n d(n) n^(-3/4) e(T,n) cos f(T,n)."""
    return math.fsum(sigma1_terms(T, N, dtab))


def sigma2_terms(T: float, Nprime: float, dtab: DivisorTable) -> np.ndarray:
    n_max = int(math.floor(Nprime))
    if n_max < 1:
        return np.zeros(0)
    _check_table(dtab, n_max)
    if 2 * math.pi * n_max >= T:
        raise ValueError(f"n={n_max} has T/(2 pi n) <= 1; N'={Nprime} is outside the formula's range")
    n = np.arange(1, n_max + 1, dtype=np.float64)
    L = np.log(T / (2 * math.pi * n))
    return -2.0 * dtab.upto(n_max) * n**-0.5 / L * np.cos(T * L - T + math.pi / 4)


def sigma2(T: float, Nprime: float, dtab: DivisorTable) -> float:
    """-2 sum_{n<=N'} d(n) n^(-1/2) (log T/2pi n)^(-1) cos(T log(T/2pi n) - T + pi/4)."""
    return math.fsum(sigma2_terms(T, Nprime, dtab))


def e_atkinson(T: float, N: float | None = None, dtab: DivisorTable | None = None,
               step_control: QuadratureConfig = DEFAULT_QUADRATURE) -> ETRecord:
    p = AtkinsonParams.build(T, N)
    if dtab is None:
        dtab = build_divisor_table(max(1, int(p.N)))
    s1 = sigma1(p.T, p.N, dtab)
    s2 = sigma2(p.T, p.Nprime, dtab)
    direct = e_direct(p.T, step_control)
    return ETRecord(p.T, direct, s1 + s2, s1, s2, direct - (s1 + s2))


def et_sweep(T_grid, n_ratio: float = 1.0) -> list[ETRecord]:
    """``e_atkinson`` over a grid of heights with N = n_ratio * T and one shared table."""
    T_grid = sorted(float(T) for T in T_grid)
    dtab = build_divisor_table(max(1, int(n_ratio * T_grid[-1]) + 1))
    return [e_atkinson(T, n_ratio * T, dtab) for T in T_grid]
