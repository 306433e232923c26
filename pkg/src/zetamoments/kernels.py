"""Shared kernels: divisor table, Atkinson phase and amplitude, P4, Gaussian integral."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _backend

EULER_GAMMA = 0.5772156649015329
# zeta'(2) = (pi^2 / 6) * (gamma + log(2 pi) - 12 log A), A = Glaisher-Kinkelin
ZETA_PRIME_2 = -0.9375482543158437

_ARSINH_SERIES_BELOW = 1e-4


@dataclass(frozen=True)
class DivisorTable:
    """Exact d(n) for 1 <= n <= limit.

    ``table[n]`` is d(n); ``table.values`` is the read-only array d(1), ..., d(limit).
    """

    limit: int
    _d: np.ndarray

    @property
    def values(self) -> np.ndarray:
        return self._d[1:]

    def __getitem__(self, n):
        if isinstance(n, (int, np.integer)) and not 1 <= n <= self.limit:
            raise IndexError(f"d({n}) outside table range 1..{self.limit}")
        return self._d[n]

    def upto(self, n: int) -> np.ndarray:
        """d(1), ..., d(n) as an int64 array."""
        if n > self.limit:
            raise ValueError(f"divisor table holds n <= {self.limit}, need {n}")
        return self._d[1 : n + 1].astype(np.int64)


def build_divisor_table(limit: int) -> DivisorTable:
    if int(limit) != limit or limit < 1:
        raise ValueError(f"limit must be a positive integer, got {limit!r}")
    d = _backend.divisor_counts(int(limit))
    d.setflags(write=False)
    return DivisorTable(int(limit), d)


def arsinh(x):
    """log(x + sqrt(1 + x^2)) for x >= 0, with a short series near zero."""
    x = np.asarray(x, dtype=np.float64)
    small = x < _ARSINH_SERIES_BELOW
    x2 = x * x
    series = x * (1.0 - x2 / 6.0 + 3.0 * x2 * x2 / 40.0)
    # log1p(x + x^2 / (1 + sqrt(1 + x^2))) == log(x + sqrt(1 + x^2))
    direct = np.log1p(x + x2 / (1.0 + np.sqrt(1.0 + x2)))
    out = np.where(small, series, direct)
    return out[()] if out.ndim == 0 else out


def atkinson_f(T, n):
    """Phase f(T, n) = 2T arsinh(sqrt(pi n / 2T)) + sqrt(2 pi n T + pi^2 n^2) - pi/4."""
    T = np.asarray(T, dtype=np.float64)
    n = np.asarray(n, dtype=np.float64)
    x = np.sqrt(np.pi * n / (2.0 * T))
    out = 2.0 * T * arsinh(x) + np.sqrt(2.0 * np.pi * n * T + (np.pi * n) ** 2) - np.pi / 4.0
    return out[()] if np.ndim(out) == 0 else out


def atkinson_e(T, n):
    """Amplitude e(T, n) = (1 + pi n / 2T)^(-1/4) * x / arsinh(x), x = sqrt(pi n / 2T)."""
    T = np.asarray(T, dtype=np.float64)
    n = np.asarray(n, dtype=np.float64)
    x = np.sqrt(np.pi * n / (2.0 * T))
    out = (1.0 + x * x) ** -0.25 * x / arsinh(x)
    return out[()] if np.ndim(out) == 0 else out


def atkinson_nprime(T: float, N: float) -> float:
    """N' = T/(2 pi) + N/2 - sqrt(N^2/4 + N T/(2 pi)).

    Evaluated as (T/2pi)^2 / (T/2pi + N/2 + sqrt(...)), which is the same number
    without the cancellation.
    """
    if T <= 0 or N <= 0:
        raise ValueError("T and N must be positive")
    a = T / (2.0 * math.pi)
    return a * a / (a + 0.5 * N + math.sqrt(0.25 * N * N + N * a))


def gaussian_integral(A: complex, B: complex) -> complex:
    """Integral over the real line of exp(A x - B x^2) = sqrt(pi/B) exp(A^2 / 4B)."""
    A = complex(A)
    B = complex(B)
    if B.real <= 0:
        raise ValueError(f"need Re(B) > 0, got B={B}")
    return np.sqrt(np.pi / B) * np.exp(A * A / (4.0 * B))


@dataclass(frozen=True)
class P4Coefficients:
    """Coefficients of the quartic in T P4(log T), the main term of the fourth moment."""

    a4: float
    a3: float
    a2: float = 0.0
    a1: float = 0.0
    a0: float = 0.0

    @classmethod
    def published_defaults(cls, a2: float = 0.0, a1: float = 0.0, a0: float = 0.0) -> "P4Coefficients":
        a4 = 1.0 / (2.0 * math.pi**2)
        a3 = 2.0 * (4.0 * EULER_GAMMA - 1.0 - math.log(2.0 * math.pi)
                    - 12.0 * ZETA_PRIME_2 / math.pi**2) / math.pi**2
        return cls(a4, a3, a2, a1, a0)

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        """(a0, a1, a2, a3, a4), lowest degree first."""
        return (self.a0, self.a1, self.a2, self.a3, self.a4)


def p4_eval(coeffs: P4Coefficients, x):
    acc = coeffs.a4
    for a in (coeffs.a3, coeffs.a2, coeffs.a1, coeffs.a0):
        acc = acc * x + a
    return acc


_P4_KEYS = ("a0", "a1", "a2", "a3", "a4")


def load_p4_config(path) -> P4Coefficients:
    """Read ``key = value`` lines (keys a0..a4, '#' comments) over the defaults."""
    base = P4Coefficients.published_defaults()
    values = dict(zip(_P4_KEYS, base.as_tuple()))
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        key = key.strip()
        if not sep or key not in values:
            raise ValueError(f"{path}:{lineno}: expected 'aN = number' with N in 0..4, got {raw!r}")
        try:
            number = float(val.strip())
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not a decimal number: {val.strip()!r}") from None
        if not math.isfinite(number):
            raise ValueError(f"{path}:{lineno}: value must be finite")
        values[key] = number
    return P4Coefficients(values["a4"], values["a3"], values["a2"], values["a1"], values["a0"])
