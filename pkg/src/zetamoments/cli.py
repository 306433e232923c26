"""Command-line entry point: ``zetamoments <subcommand> [options]``.

Exit codes: 0 success, 1 invalid input, 2 failure while computing.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import _backend

OUTPUT_DIR_ENV = "ZETAMOMENTS_OUTPUT_DIR"


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


def _floats(text: str) -> list[float]:
    try:
        return [float(x) for x in text.replace(";", ",").split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def read_config(path) -> dict[str, str]:
    """``key = value`` lines, '#' comments."""
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, val = line.partition("=")
        if not sep or not key.strip():
            raise ValidationError(f"{path}:{lineno}: expected key = value")
        out[key.strip().replace("-", "_")] = val.strip()
    return out


def _common(p):
    p.add_argument("--config", help="key = value file; flags given on the command line win")
    p.add_argument("--threads", type=_positive_int, default=None,
                   help="worker threads for the compiled kernels (default: all cores)")
    p.add_argument("--out", help=f"output path (relative paths go under ${OUTPUT_DIR_ENV} if set)")
    p.add_argument("--format", choices=("csv", "json"), default=None)


def build_parser() -> _Parser:
    parser = _Parser(prog="zetamoments", description="Moments of the zeta function on the critical line.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("zeta", help="evaluate zeta(1/2 + it)")
    _common(p)
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--method", choices=("auto", "rs", "em"), default="auto")
    p.add_argument("--terms", type=_positive_int, default=30, help="Euler-Maclaurin corrections")

    p = sub.add_parser("etterm", help="E(T) directly and by Atkinson's formula over a T grid")
    _common(p)
    p.add_argument("--tmin", type=float, required=True)
    p.add_argument("--tmax", type=float, required=True)
    p.add_argument("--points", type=_positive_int, default=10)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--nratio", type=float, default=1.0, help="N = nratio * T, inside (1/2, 2)")

    p = sub.add_parser("smoothed", help="J_k(t, G) by quadrature and the explicit series")
    _common(p)
    p.add_argument("--t", type=_floats, help="one or more heights")
    p.add_argument("--G", type=_floats, help="widths (one per height, or one for all)")
    p.add_argument("--theta", type=float, help="G = t^theta instead of --G")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--methods", default="quadrature,series29",
                   help="pair compared, from quadrature, series29, series28")

    p = sub.add_parser("spectral", help="load spectral data and evaluate the J_2 series")
    _common(p)
    p.add_argument("--file", required=True)
    p.add_argument("--t", type=float)
    p.add_argument("--G", type=float)
    p.add_argument("--D", type=float, default=1.0)
    p.add_argument("--quadrature", action="store_true", help="also compute J_2 by quadrature")
    p.add_argument("--K", type=_floats, help="K grid for the partial-sum and window-sum shape checks")

    p = sub.add_parser("spacing", help="spacing counts and bound-shape report")
    _common(p)
    p.add_argument("--family", choices=("triples", "quads"), required=True)
    p.add_argument("--M", type=_floats, help="triples: M values (a ladder if several)")
    p.add_argument("--Mprime", type=_floats, help="triples: M' values (one per M, or one for all)")
    p.add_argument("--N", type=_floats, help="quads: N values")
    p.add_argument("--k", type=int, default=2, help="quads: root order")
    p.add_argument("--delta", type=_floats, required=True, help="one per size, or one for all")
    p.add_argument("--bruteforce", action="store_true", help="also run the reference counter")

    p = sub.add_parser("moments", help="int_T^2T J_k^m dt sweeps")
    _common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--theta", type=float, required=True)
    p.add_argument("--T", type=_floats, required=True)

    p = sub.add_parser("largevalues", help="large-value counts and the implied moment bound")
    _common(p)
    p.add_argument("--T", type=_floats, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--V", type=_floats, required=True)

    p = sub.add_parser("selftest", help="run the built-in checks")
    _common(p)
    p.add_argument("--verbose", action="store_true")
    return parser


def _apply_config(parser: _Parser, argv: list[str]) -> argparse.Namespace:
    subs = parser._subparsers._group_actions[0].choices
    if not argv or argv[0] not in subs:
        return parser.parse_args(argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv[1:])
    if known.config is None:
        return parser.parse_args(argv)
    sub = subs[argv[0]]
    actions = {a.dest: a for a in sub._actions if a.dest not in ("help", "config")}
    try:
        cfg = read_config(known.config)
    except OSError as e:
        raise ValidationError(f"cannot read config {known.config}: {e.strerror or e}") from None
    unknown = sorted(set(cfg) - set(actions))
    if unknown:
        raise ValidationError(f"{known.config}: unknown keys for '{argv[0]}': {', '.join(unknown)}")
    defaults = {}
    for key, text in cfg.items():
        act = actions[key]
        if isinstance(act, argparse._StoreTrueAction):
            defaults[key] = text.lower() in ("1", "true", "yes", "on")
            continue
        if act.choices is not None and text not in act.choices:
            raise ValidationError(f"{known.config}: {key} must be one of {', '.join(map(str, act.choices))}")
        try:
            defaults[key] = act.type(text) if act.type else text
        except (ValueError, argparse.ArgumentTypeError) as e:
            raise ValidationError(f"{known.config}: bad value for {key}: {e}") from None
        act.required = False
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


def _output_path(out: str | None) -> Path | None:
    if out is None:
        return None
    p = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not p.is_absolute():
        p = Path(base) / p
    return p


def _write(records, columns, args, default_format="csv"):
    from .records import emit, to_csv, to_json
    fmt = args.format or default_format
    path = _output_path(args.out)
    if path is None:
        text = to_csv(records, columns) if fmt == "csv" else to_json(records, columns)
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        emit(records, fmt, path, columns)


def _write_json(obj, args):
    text = json.dumps(obj, indent=1, default=_json_default)
    path = _output_path(args.out)
    if path is None:
        print(text)
    else:
        from .records import EmitError
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text + "\n")
        except OSError as e:
            raise EmitError(f"cannot write {path}: {e.strerror or e}") from e


def _json_default(o):
    if hasattr(o, "tolist"):
        return o.tolist()
    if hasattr(o, "__dict__"):
        return o.__dict__
    raise TypeError(type(o).__name__)


def _need(cond: bool, message: str):
    if not cond:
        raise ValidationError(message)


def _broadcast(values, n, name):
    if values is None:
        raise ValidationError(f"--{name} is required")
    if len(values) == 1:
        return values * n
    _need(len(values) == n, f"--{name} needs 1 or {n} values, got {len(values)}")
    return values


# Each handler validates and returns a zero-argument job; only the job does heavy work.

def _cmd_zeta(args):
    from .zeta import RS_MIN_T, zeta_em, zeta_rs
    t = args.t
    _need(math.isfinite(t), "--t must be finite")
    method = args.method
    if method == "auto":
        method = "rs" if abs(t) >= RS_MIN_T else "em"
    _need(method != "rs" or abs(t) >= RS_MIN_T, f"--method rs needs |t| >= {RS_MIN_T}; use --method em")

    def job():
        p = zeta_rs(t) if method == "rs" else zeta_em(abs(t), args.terms)
        if method == "em" and t < 0:
            from .zeta import ZetaPoint
            p = ZetaPoint(t, p.re, -p.im, p.abs2)
        _write([p], ("t", "re", "im", "abs2"), args)
    return job


def _cmd_etterm(args):
    from .atkinson import ET_COLUMNS, WINDOW_HIGH, WINDOW_LOW, et_sweep
    _need(10 <= args.tmin <= args.tmax, "need 10 <= tmin <= tmax")
    _need(args.tmax <= 1e6, "tmax above 1e6 is outside the supported range")
    _need(WINDOW_LOW < args.nratio < WINDOW_HIGH, f"nratio must lie in ({WINDOW_LOW}, {WINDOW_HIGH})")
    if args.points == 1:
        grid = [args.tmin]
    elif args.spacing == "log":
        grid = np.geomspace(args.tmin, args.tmax, args.points).tolist()
    else:
        grid = np.linspace(args.tmin, args.tmax, args.points).tolist()

    def job():
        _write(et_sweep(grid, args.nratio), ET_COLUMNS, args)
    return job


def _cmd_smoothed(args):
    from .smoothed import METHODS, SMOOTHED_COLUMNS, j_residual_sweep
    _need(args.t is not None and len(args.t) > 0, "--t is required")
    ts = args.t
    if args.theta is not None:
        _need(0 < args.theta <= 1, "--theta must lie in (0, 1]")
        Gs = [t**args.theta for t in ts]
    else:
        Gs = _broadcast(args.G, len(ts), "G")
    methods = tuple(m.strip() for m in args.methods.split(","))
    _need(len(methods) == 2 and all(m in METHODS[:3] for m in methods),
          "--methods takes two of quadrature, series29, series28")
    _need(args.k in (1, 2, 3, 4), "--k must be in 1..4")
    _need(args.k == 1 or set(methods) == {"quadrature"}, "the series exist only for k = 1")
    for t, G in zip(ts, Gs):
        _need(t >= 10 and G >= 1, f"need t >= 10 and G >= 1, got t={t}, G={G}")
        if "series28" in methods:
            _need(t**0.25 <= G * (1 + 1e-12) and G <= t / math.log(t), f"G={G} outside [t^1/4, t/log t] at t={t}")
    grid = [(t, G, args.k) for t, G in zip(ts, Gs)]

    def job():
        sweep = j_residual_sweep(grid, methods)
        _write(sweep.rows, SMOOTHED_COLUMNS, args)
        print(f"# fitted C = {sweep.fitted_C:.6g}, trend slope = {sweep.trend_slope:.4g}", file=sys.stderr)
    return job


def _cmd_spectral(args):
    from .spectral import (SpectralFormatError, j2_cutoff, j2_spectral, j2_window, load_spectral,
                           partial_sum_shape, window_sum_shape)
    try:
        data = load_spectral(args.file)
    except (OSError, SpectralFormatError) as e:
        raise ValidationError(str(e)) from None
    if args.t is not None or args.G is not None:
        _need(args.t is not None and args.G is not None, "--t and --G go together")
        lo, hi = j2_window(args.t, args.D)
        _need(lo <= args.G <= hi, f"G={args.G} outside [{lo:.6g}, {hi:.6g}]")
        need = j2_cutoff(args.t, args.G)
        _need(not len(data) or data.max_kappa >= need,
              f"spectral data reaches kappa={data.max_kappa:.6g}; need coverage up to {need:.6g}")

    def job():
        report = {"source": data.source, "normalization": data.normalization,
                  "count": len(data), "max_kappa": data.max_kappa}
        if args.t is not None:
            sm = j2_spectral(args.t, args.G, data, args.D)
            report["j2_series"] = {"t": sm.t, "G": sm.G, "value": sm.value, "truncation": sm.truncation}
            if args.quadrature:
                from .smoothed import jk_quadrature
                q = jk_quadrature(args.t, args.G, 2).value
                report["j2_series"]["quadrature"] = q
                report["j2_series"]["residual"] = q - sm.value
        if args.K:
            ps, ws = partial_sum_shape(data, args.K), window_sum_shape(data, args.K)
            report["partial_sum_shape"] = {"K": ps.K, "ratio": ps.ratio, "fitted_C": ps.fitted_C,
                                           "trend_slope": ps.trend_slope, "flags": ps.flags}
            report["window_sum_shape"] = {"K": ws.K, "ratio": ws.ratio, "fitted_C": ws.fitted_C,
                                          "trend_slope": ws.trend_slope, "flags": ws.flags}
        _write_json(report, args)
    return job


def _cmd_spacing(args):
    from .spacing import (QUAD_BRUTE_MAX_N, QUAD_FAST_MAX_N, SPACING_COLUMNS, TRIPLE_WORK_LIMIT,
                          QuadCountQuery, TripleCountQuery, count_quads_bruteforce,
                          count_triples_bruteforce, verify_bound_shapes)
    queries = []
    try:
        if args.family == "triples":
            _need(args.M is not None, "--M is required for triples")
            Ms = args.M
            Mps = _broadcast(args.Mprime if args.Mprime is not None else Ms, len(Ms), "Mprime")
            ds = _broadcast(args.delta, len(Ms), "delta")
            queries = [TripleCountQuery(int(M), int(Mp), d) for M, Mp, d in zip(Ms, Mps, ds)]
            if args.bruteforce:
                for q in queries:
                    _need(q.M**2 * q.Mprime <= TRIPLE_WORK_LIMIT, f"M={q.M}: brute force over the work bound")
        else:
            _need(args.N is not None, "--N is required for quads")
            ds = _broadcast(args.delta, len(args.N), "delta")
            queries = [QuadCountQuery(int(N), args.k, d) for N, d in zip(args.N, ds)]
            for q in queries:
                _need(q.N <= QUAD_FAST_MAX_N, f"N={q.N} exceeds {QUAD_FAST_MAX_N}")
                _need(not args.bruteforce or q.N <= QUAD_BRUTE_MAX_N, f"N={q.N}: brute force over {QUAD_BRUTE_MAX_N}")
    except ValueError as e:
        raise ValidationError(str(e)) from None

    def job():
        report = verify_bound_shapes(queries)
        if args.bruteforce:
            for q, row in zip(queries, report.rows):
                ref = count_triples_bruteforce(q) if args.family == "triples" else count_quads_bruteforce(q)
                if ref != row.count:
                    raise RuntimeError(f"fast count {row.count} != brute force {ref} for {row.parameters}")
        _write(report.rows, SPACING_COLUMNS, args)
        for fam in report.fitted:
            print(f"# {fam}: fitted C = {report.fitted[fam]:.6g}, spread = {report.spread[fam]:.4g}, "
                  f"trend = {report.trend[fam]:.4g}", file=sys.stderr)
    return job


def _cmd_moments(args):
    from .experiments import MomentSweepConfig, is_nonincreasing, moment_of_jk
    try:
        cfg = MomentSweepConfig(args.k, args.m, tuple(args.T), args.theta)
    except ValueError as e:
        raise ValidationError(str(e)) from None
    for T in cfg.T_grid:
        _need(cfg.G(T) >= 1, f"G = T^theta < 1 at T={T}")
        _need(T <= 1e6, "T above 1e6 is outside the supported range")

    def job():
        recs = moment_of_jk(cfg)
        _write(recs, ("T", "G", "k", "m", "theta", "integral", "ratio", "seconds"), args)
        print(f"# ratio non-increasing: {is_nonincreasing([r.ratio for r in recs])}", file=sys.stderr)
    return job


def _cmd_largevalues(args):
    from .experiments import I_K_GUARD, THEOREM_ALPHA, theorem4_sweep
    _need((args.k, args.m) in THEOREM_ALPHA, f"(k, m) = ({args.k}, {args.m}) outside the treated range")
    _need(THEOREM_ALPHA[(args.k, args.m)] - 1e-12 <= args.alpha < 1,
          f"alpha must be >= {THEOREM_ALPHA[(args.k, args.m)]:.4g} and < 1")
    _need(all(10 <= T <= I_K_GUARD for T in args.T), f"every T must lie in [10, {I_K_GUARD:g}]")
    _need(all(V > 0 for V in args.V), "every V must be positive")

    def job():
        _write_json(theorem4_sweep(args.T, args.k, args.m, args.alpha, args.V), args)
    return job


def _cmd_selftest(args):
    from .selftest import run_selftest

    def job():
        passed, failed = run_selftest(args.verbose, sys.stderr)
        print(f"selftest: {passed} passed, {failed} failed")
        if failed:
            raise RuntimeError(f"{failed} self-test check(s) failed")
    return job


HANDLERS = {
    "zeta": _cmd_zeta, "etterm": _cmd_etterm, "smoothed": _cmd_smoothed, "spectral": _cmd_spectral,
    "spacing": _cmd_spacing, "moments": _cmd_moments, "largevalues": _cmd_largevalues,
    "selftest": _cmd_selftest,
}


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    if not argv:
        parser.print_usage(sys.stderr)
        return 1
    try:
        args = _apply_config(parser, argv)
        if args.command is None:
            parser.print_usage(sys.stderr)
            return 1
        if args.threads is not None:
            _backend.set_num_threads(args.threads)
        job = HANDLERS[args.command](args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    try:
        job()
    except Exception as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
