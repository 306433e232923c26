"""Kernel backend selection.

The compiled extension is used when it imports; otherwise the numpy fallback.
Set ``ZETAMOMENTS_BACKEND=python`` to force the fallback.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from ._rs_coeffs import RS_COEFFS

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    BACKENDS["cython"] = _ckernels

_requested = os.environ.get("ZETAMOMENTS_BACKEND", "").strip().lower()
if _requested and _requested not in BACKENDS:
    raise ImportError(f"ZETAMOMENTS_BACKEND={_requested!r} is not available; have {sorted(BACKENDS)}")
BACKEND = _requested or ("cython" if "cython" in BACKENDS else "python")
kernels = BACKENDS[BACKEND]

_DEGREES = np.array([len(c) - 1 for c in RS_COEFFS], dtype=np.int64)
RS_TABLE = np.zeros((len(RS_COEFFS), int(_DEGREES.max()) + 1))
for _j, _c in enumerate(RS_COEFFS):
    RS_TABLE[_j, : len(_c)] = _c
RS_DEGREES = _DEGREES

_threads = max(1, os.cpu_count() or 1)


def set_num_threads(n: int) -> None:
    global _threads
    if n < 1:
        raise ValueError("thread count must be positive")
    _threads = int(n)


def get_num_threads() -> int:
    return _threads


def rs_hardy_z(t, backend: str | None = None):
    mod = BACKENDS[backend] if backend else kernels
    t = np.ascontiguousarray(t, dtype=np.float64)
    return mod.rs_hardy_z(t, RS_TABLE, RS_DEGREES, _threads)


def divisor_counts(limit: int, backend: str | None = None):
    mod = BACKENDS[backend] if backend else kernels
    return mod.divisor_counts(int(limit))


def weighted_close_pairs(s, w, x: float, backend: str | None = None) -> int:
    mod = BACKENDS[backend] if backend else kernels
    s = np.ascontiguousarray(s, dtype=np.float64)
    w = np.ascontiguousarray(w, dtype=np.int64)
    return int(mod.weighted_close_pairs(s, w, float(x)))


def rs_hardy_z_grid(t0: float, h: float, npts: int, backend: str | None = None):
    mod = BACKENDS[backend] if backend else kernels
    return mod.rs_hardy_z_grid(float(t0), float(h), int(npts), RS_TABLE, RS_DEGREES, _threads)
