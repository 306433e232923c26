"""Spectral data for the fourth-moment explicit formula.

Files hold one ``kappa alphaH3`` pair per line (whitespace separated, '#'
comments). The loader only checks the format; it cannot check that the
table's normalization of alpha_j H_j^3(1/2) is the one the formula expects.
Put it in a ``# normalization: ...`` header line and it will be carried along.
"""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .smoothed import SmoothedMoment, trend_slope

DEFAULT_D = 1.0


@dataclass(frozen=True)
class SpectralDatum:
    kappa: float
    alphaH3: float

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise ValueError(f"kappa must be finite and positive, got {self.kappa}")
        if not math.isfinite(self.alphaH3):
            raise ValueError(f"alphaH3 must be finite, got {self.alphaH3}")

    @property
    def eigenvalue(self) -> float:
        return self.kappa**2 + 0.25


@dataclass(frozen=True)
class SpectralDataset:
    data: tuple[SpectralDatum, ...] = ()
    source: str = ""
    normalization: str = ""

    def __post_init__(self):
        for i in range(1, len(self.data)):
            if not self.data[i].kappa > self.data[i - 1].kappa:
                raise ValueError(f"kappa not strictly increasing at index {i}")

    @property
    def max_kappa(self) -> float:
        return self.data[-1].kappa if self.data else 0.0

    @property
    def kappas(self) -> np.ndarray:
        return np.array([d.kappa for d in self.data], dtype=np.float64)

    @property
    def weights(self) -> np.ndarray:
        return np.array([d.alphaH3 for d in self.data], dtype=np.float64)

    def __len__(self) -> int:
        return len(self.data)

    @classmethod
    def from_arrays(cls, kappa, alphaH3, source: str = "in-memory", normalization: str = "") -> "SpectralDataset":
        return cls(tuple(SpectralDatum(float(k), float(a)) for k, a in zip(kappa, alphaH3)),
                   source, normalization)


class SpectralFormatError(ValueError):
    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.lineno = lineno


def load_spectral(path) -> SpectralDataset:
    path = Path(path)
    raw = path.read_bytes()
    data: list[SpectralDatum] = []
    normalization = ""
    for lineno, line in enumerate(raw.decode("utf-8").splitlines(), start=1):
        body, _, comment = line.partition("#")
        key, sep, val = comment.partition(":")
        if sep and key.strip().lower() == "normalization":
            normalization = val.strip()
        fields = body.split()
        if not fields:
            continue
        if len(fields) != 2:
            raise SpectralFormatError(path, lineno, f"expected 'kappa alphaH3', got {line.strip()!r}")
        try:
            kappa, a = float(fields[0]), float(fields[1])
        except ValueError:
            raise SpectralFormatError(path, lineno, f"not a decimal number in {line.strip()!r}") from None
        if not (math.isfinite(kappa) and kappa > 0):
            raise SpectralFormatError(path, lineno, f"kappa must be finite and positive, got {fields[0]}")
        if not math.isfinite(a):
            raise SpectralFormatError(path, lineno, f"alphaH3 must be finite, got {fields[1]}")
        if data and not kappa > data[-1].kappa:
            raise SpectralFormatError(path, lineno, f"kappa {kappa!r} does not exceed previous {data[-1].kappa!r}")
        data.append(SpectralDatum(kappa, a))
    digest = hashlib.sha256(raw).hexdigest()[:16]
    return SpectralDataset(tuple(data), f"{path.resolve()} sha256:{digest}", normalization)


def write_spectral(dataset: SpectralDataset, path) -> None:
    lines = [f"# source: {dataset.source}"]
    if dataset.normalization:
        lines.append(f"# normalization: {dataset.normalization}")
    lines += [f"{d.kappa!r} {d.alphaH3!r}" for d in dataset.data]
    Path(path).write_text("\n".join(lines) + "\n")


# -- the J_2 series -----------------------------------------------------------

def j2_window(t: float, D: float = DEFAULT_D) -> tuple[float, float]:
    L = math.log(t)
    return math.sqrt(t) / L**D, t / L


def j2_cutoff(t: float, G: float) -> float:
    """Required spectral coverage t G^-1 log t."""
    return t * math.log(t) / G


def j2_terms(t: float, G: float, kappa: np.ndarray, w: np.ndarray) -> np.ndarray:
    return (math.pi / math.sqrt(2 * t)) * w * kappa**-0.5 \
        * np.sin(kappa * np.log(kappa / (4 * math.e * t))) * np.exp(-0.25 * (G * kappa / t) ** 2)


def j2_spectral(t: float, G: float, data: SpectralDataset, D: float = DEFAULT_D,
                cutoff_factor: float = 1.0) -> SmoothedMoment:
    """Spectral series for J_2(t, G), truncated at kappa <= cutoff_factor * t G^-1 log t.

    The polylog offset of the formula is not included. An empty dataset is an
    empty sum; a nonempty one must reach the cutoff.
    """
    t, G = float(t), float(G)
    if t <= math.e:
        raise ValueError("t must exceed e")
    lo, hi = j2_window(t, D)
    if not lo <= G <= hi:
        raise ValueError(f"G={G} outside [t^(1/2)/log^D t, t/log t] = [{lo:.6g}, {hi:.6g}] (D={D})")
    if cutoff_factor < 1:
        raise ValueError("cutoff_factor must be >= 1")
    if not len(data):
        return SmoothedMoment(2, t, G, 0.0, "spectral", 0)
    K = cutoff_factor * j2_cutoff(t, G)
    if data.max_kappa < K:
        raise ValueError(f"spectral data reaches kappa={data.max_kappa:.6g}; need coverage up to {K:.6g}")
    kap, w = data.kappas, data.weights
    use = kap <= K
    value = math.fsum(j2_terms(t, G, kap[use], w[use]))
    return SmoothedMoment(2, t, G, value, "spectral", int(use.sum()))


def spectral_window_sum(data: SpectralDataset, K: float) -> float:
    """Sum of alphaH3 over K - 1 <= kappa <= K + 1."""
    if K < 1:
        raise ValueError("K must be >= 1")
    if not len(data):
        return 0.0
    kap = data.kappas
    sel = (kap >= K - 1) & (kap <= K + 1)
    return math.fsum(data.weights[sel])


@dataclass
class ShapeCheck:
    K: np.ndarray
    ratio: np.ndarray
    fitted_C: float
    trend_slope: float
    flags: list[str] = field(default_factory=list)


def partial_sum_shape(data: SpectralDataset, K_grid) -> ShapeCheck:
    """sum_{kappa <= K} alphaH3 / (K^2 log^3 K) on a K grid; upward drift is flagged."""
    K = np.asarray(sorted(float(k) for k in K_grid if 1 < k <= max(data.max_kappa, 1)))
    if K.size == 0:
        return ShapeCheck(K, K, 0.0, 0.0, ["no K in (1, max_kappa]"])
    csum = np.concatenate(([0.0], np.cumsum(data.weights)))
    partial = csum[np.searchsorted(data.kappas, K, side="right")]
    ratio = partial / (K**2 * np.log(K) ** 3)
    mag = np.abs(ratio)
    slope = trend_slope(np.log(K), mag / max(mag.max(), 1e-300)) if K.size > 1 else 0.0
    flags = [f"partial sums grow faster than K^2 log^3 K (normalized slope {slope:.3g})"] if slope > 0.1 else []
    return ShapeCheck(K, ratio, float(np.abs(ratio).max()), slope, flags)


def window_sum_shape(data: SpectralDataset, K_grid, eps: float = 0.1) -> ShapeCheck:
    """Window sums against K^(1+eps)."""
    K = np.asarray(sorted(float(k) for k in K_grid if k >= 1))
    vals = np.array([spectral_window_sum(data, k) for k in K])
    ratio = vals / K ** (1 + eps)
    mag = np.abs(ratio)
    slope = trend_slope(np.log(K), mag / max(mag.max(), 1e-300)) if K.size > 1 else 0.0
    flags = [f"window sums grow faster than K^(1+eps) (normalized slope {slope:.3g})"] if slope > 0.1 else []
    return ShapeCheck(K, ratio, float(np.abs(ratio).max()) if K.size else 0.0, slope, flags)


def count_spectral_quadruples(data: SpectralDataset, K: float, delta: float) -> int:
    """Ordered (j, m, l, n) with kappas in (K, 2K] and
    |sqrt(lam_j) + sqrt(lam_m) - sqrt(lam_l) - sqrt(lam_n)| < delta, by enumeration."""
    if not delta > 0:
        raise ValueError("delta must be positive")
    kap = data.kappas
    r = np.sqrt(kap[(kap > K) & (kap <= 2 * K)] ** 2 + 0.25)
    if r.size == 0:
        return 0
    pair = (r[:, None] + r[None, :]).ravel()
    total = 0
    block = max(1, (1 << 22) // pair.size)
    for i in range(0, pair.size, block):
        total += int(np.count_nonzero(np.abs(pair[i:i + block, None] - pair[None, :]) < delta))
    return total
