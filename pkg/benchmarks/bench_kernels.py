"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--quick]

Prints one line per kernel with the best wall time of each backend, the
speedup, and the largest disagreement between the two outputs.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from zetamoments import _backend


def _best(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _cases(quick: bool):
    rng = np.random.default_rng(1)
    scale = 0.1 if quick else 1.0
    t = rng.uniform(1e3, 1e5, int(20000 * scale))
    n = int(2e6 * scale)
    s = np.sort(rng.uniform(0, 1000, int(200000 * scale)))
    w = rng.integers(1, 4, s.size)
    return [
        ("rs_hardy_z (random t in [1e3, 1e5])",
         lambda b: _backend.rs_hardy_z(t, backend=b)[0]),
        ("rs_hardy_z_grid (t0=1e5, step 0.05)",
         lambda b: _backend.rs_hardy_z_grid(1e5, 0.05, int(40000 * scale), backend=b)[0]),
        (f"divisor_counts (limit {n})",
         lambda b: _backend.divisor_counts(n, backend=b)),
        (f"weighted_close_pairs ({s.size} sums)",
         lambda b: np.array([_backend.weighted_close_pairs(s, w, 1e-3, backend=b)])),
    ]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)

    if "cython" not in _backend.BACKENDS:
        print("compiled extension not built; only the numpy fallback is available")
        return 1
    print(f"threads: {_backend.get_num_threads()}")
    print(f"{'kernel':44s} {'cython s':>10s} {'python s':>10s} {'speedup':>8s} {'max diff':>10s}")
    for name, run in _cases(args.quick):
        tc, oc = _best(lambda: run("cython"), args.repeat)
        tp, op = _best(lambda: run("python"), args.repeat)
        diff = float(np.max(np.abs(np.asarray(oc, float) - np.asarray(op, float)))) if np.size(oc) else 0.0
        print(f"{name:44s} {tc:10.4f} {tp:10.4f} {tp / tc:8.1f} {diff:10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
