"""Command-line interface.

Scalar results are emitted as JSON, tabular results (curve, simulate,
sweep) as CSV; simulation CSV starts with a ``#``-prefixed JSON echo of the
configuration.  Exit codes: 0 success, 2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import geometry, likelihood, montecarlo
from .bound import multimodality_bound, multimodality_bound_from_ratio
from .cubics import Cubic, solve_cubic
from .errors import BfmleError
from .summaries import SummaryStats, summarize

__all__ = ["main"]


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _read_grouped_csv(path: str) -> tuple[list[float], list[float]]:
    """Two-column CSV with header ``group,value``; group is ``x`` or ``y``."""
    xs: list[float] = []
    ys: list[float] = []
    with open(path, newline="") as handle:
        reader = csv.DictReader(handle)
        if reader.fieldnames is None or set(reader.fieldnames) != {"group", "value"}:
            raise BfmleError(f"{path}: expected CSV header 'group,value'")
        for row in reader:
            group = row["group"].strip()
            if group not in ("x", "y"):
                raise BfmleError(f"{path}: group must be 'x' or 'y', got {group!r}")
            try:
                value = float(row["value"])
            except ValueError as exc:
                raise BfmleError(f"{path}: bad value {row['value']!r}") from exc
            (xs if group == "x" else ys).append(value)
    return xs, ys


def _read_column(path: str) -> list[float]:
    values: list[float] = []
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            try:
                values.append(float(line))
            except ValueError as exc:
                raise BfmleError(f"{path}: bad value {line!r}") from exc
    return values


def _summary_from_args(args: argparse.Namespace, parser: argparse.ArgumentParser) -> SummaryStats:
    summary_flags = (args.nx, args.mx, args.vx, args.ny, args.my, args.vy)
    has_summary = any(v is not None for v in summary_flags)
    modes = sum((args.data is not None, args.x_file is not None or args.y_file is not None,
                 has_summary))
    if modes != 1:
        parser.error("provide exactly one input: --data, --x-file/--y-file, or summary flags")
    if args.data is not None:
        return summarize(*_read_grouped_csv(args.data))
    if args.x_file is not None or args.y_file is not None:
        if args.x_file is None or args.y_file is None:
            parser.error("--x-file and --y-file must be given together")
        return summarize(_read_column(args.x_file), _read_column(args.y_file))
    if any(v is None for v in summary_flags):
        parser.error("summary input needs all of --nx --mx --vx --ny --my --vy")
    vx, vy = args.vx, args.vy
    if args.unbiased:
        # Convert divisor-(n-1) variances to the divisor-n convention.
        vx *= (args.nx - 1) / args.nx
        vy *= (args.ny - 1) / args.ny
    return SummaryStats(n=args.nx, m=args.ny, mean_x=args.mx, mean_y=args.my,
                        var_x=vx, var_y=vy)


def _cmd_fit(args, parser) -> int:
    s = _summary_from_args(args, parser)
    fit = likelihood.fit_null(s)
    alt = likelihood.fit_alternative(s)
    _emit_json({
        "mu_hat": fit.mle.params.mu,
        "var_x_hat": fit.mle.params.var_x,
        "var_y_hat": fit.mle.params.var_y,
        "loglik_null": fit.mle.loglik,
        "loglik_alt": alt.loglik,
        "lrt": max(0.0, 2.0 * (alt.loglik - fit.mle.loglik)),
        "discriminant": fit.discriminant,
        "multimodal": fit.multimodal,
        "degenerate": fit.degenerate,
        "stationary_points": [
            {"mu": p.params.mu, "loglik": p.loglik, "kind": p.kind.value}
            for p in fit.all_points
        ],
    })
    return 0


def _cmd_roots(args, _parser) -> int:
    roots = solve_cubic(Cubic(a3=args.a3, a2=args.a2, a1=args.a1, a0=args.a0))
    _emit_json({
        "roots": list(roots.roots),
        "discriminant": roots.discriminant,
        "degenerate": roots.degenerate,
    })
    return 0


def _cmd_classify(args, _parser) -> int:
    point = geometry.classify_point(args.gamma, args.delta, args.r)
    prediction = geometry.asymptotic_prediction(args.gamma, args.delta, args.r)
    _emit_json({
        "gamma": point.gamma,
        "delta": point.delta,
        "r": point.r,
        "d_value": point.d_value,
        "region": point.region.value,
        "prediction": {
            "limit_prob_three_roots": prediction.limit_prob_three_roots,
            "case": prediction.case.value,
        },
    })
    return 0


def _cmd_curve(args, _parser) -> int:
    points = geometry.trace_curve(args.r, args.gamma_min, args.gamma_max, args.steps)
    sys.stdout.write("gamma,delta\n")
    for gamma, delta in points:
        sys.stdout.write(f"{gamma!r},{delta!r}\n")
    return 0


def _cmd_cusps(args, _parser) -> int:
    cs = geometry.cusps(args.r)
    ray = geometry.cusp_tangent_ray(args.r)
    _emit_json({
        "r": cs.r,
        "gamma": cs.gamma,
        "delta": cs.delta,
        "points": [list(p) for p in cs.points],
        "tangent_ray": list(ray),
    })
    return 0


def _cmd_bound(args, parser) -> int:
    if (args.n is None) == (args.r is None):
        parser.error("provide exactly one of --n or --r")
    if args.n is not None:
        result = multimodality_bound(args.n, args.m, args.gamma)
        r = args.n / args.m
    else:
        result = multimodality_bound_from_ratio(args.r, args.m, args.gamma)
        r = args.r
    _emit_json({
        "n": args.n,
        "m": args.m,
        "r": r,
        "gamma": args.gamma,
        "c_n": result.c_n,
        "t_threshold": result.t_threshold,
        "bound": result.bound,
    })
    return 0


def _resolve_seed(args, parser) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("BF_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        parser.error(f"BF_SEED must be an integer, got {env!r}")
        raise AssertionError  # unreachable


def _sim_config(args, parser, mu_x: float, mu_y: float) -> montecarlo.SimConfig:
    return montecarlo.SimConfig(
        n=args.n, m=args.m, mu_x=mu_x, mu_y=mu_y,
        var_x=args.vx, var_y=args.vy,
        replications=args.reps, seed=_resolve_seed(args, parser),
        workers=args.workers,
    )


def _config_echo(cfg: montecarlo.SimConfig) -> dict:
    return {
        "n": cfg.n, "m": cfg.m, "mu_x": cfg.mu_x, "mu_y": cfg.mu_y,
        "var_x": cfg.var_x, "var_y": cfg.var_y,
        "replications": cfg.replications, "seed": cfg.seed, "workers": cfg.workers,
    }


_SIM_HEADER = "delta,p_hat,std_err,replications,degenerate_count\n"


def _sim_row(delta: float, res: montecarlo.SimResult) -> str:
    return (f"{delta!r},{res.p_hat!r},{res.std_err!r},"
            f"{res.replications},{res.degenerate_count}\n")


def _cmd_simulate(args, parser) -> int:
    cfg = _sim_config(args, parser, args.mux, args.muy)
    result = montecarlo.estimate_prob_three(cfg)
    delta = (cfg.mu_x - cfg.mu_y) / cfg.var_y ** 0.5
    sys.stdout.write("# " + json.dumps(_config_echo(cfg)) + "\n")
    sys.stdout.write(_SIM_HEADER)
    sys.stdout.write(_sim_row(delta, result))
    return 0


def _cmd_sweep(args, parser) -> int:
    try:
        deltas = [float(part) for part in args.deltas.split(",") if part.strip()]
    except ValueError:
        parser.error(f"--deltas must be comma-separated numbers, got {args.deltas!r}")
    if not deltas:
        parser.error("--deltas is empty")
    cfg = _sim_config(args, parser, 0.0, 0.0)
    echo = _config_echo(cfg)
    echo["deltas"] = deltas
    sys.stdout.write("# " + json.dumps(echo) + "\n")
    sys.stdout.write(_SIM_HEADER)
    for point in montecarlo.sweep_delta(cfg, deltas):
        sys.stdout.write(_sim_row(point.delta, point.result))
    return 0


def _add_sim_flags(sub: argparse.ArgumentParser, with_means: bool) -> None:
    sub.add_argument("--n", type=int, required=True, help="first sample size")
    sub.add_argument("--m", type=int, required=True, help="second sample size")
    if with_means:
        sub.add_argument("--mux", type=float, default=0.0, help="mean of X (default 0)")
        sub.add_argument("--muy", type=float, default=0.0, help="mean of Y (default 0)")
    sub.add_argument("--vx", type=float, default=1.0, help="variance of X (default 1)")
    sub.add_argument("--vy", type=float, default=1.0, help="variance of Y (default 1)")
    sub.add_argument("--reps", type=int, default=10000, help="replications (default 10000)")
    sub.add_argument("--seed", type=int, default=None,
                     help="64-bit seed (default: BF_SEED env var, else 0)")
    sub.add_argument("--workers", type=int, default=1, help="parallel workers (default 1)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfmle",
        description="Exact MLE and multimodality diagnostics for the "
                    "two-sample common-mean normal model.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    fit = subs.add_parser("fit", help="fit the common-mean model and report the LRT")
    fit.add_argument("--data", help="CSV file with header group,value (group in {x,y})")
    fit.add_argument("--x-file", help="file with one X value per line")
    fit.add_argument("--y-file", help="file with one Y value per line")
    fit.add_argument("--nx", type=int, help="first sample size")
    fit.add_argument("--mx", type=float, help="first sample mean")
    fit.add_argument("--vx", type=float, help="first sample variance (divisor n)")
    fit.add_argument("--ny", type=int, help="second sample size")
    fit.add_argument("--my", type=float, help="second sample mean")
    fit.add_argument("--vy", type=float, help="second sample variance (divisor n)")
    fit.add_argument("--unbiased", action="store_true",
                     help="treat --vx/--vy as divisor-(n-1) variances and convert")

    roots = subs.add_parser("roots", help="real roots of a cubic")
    for name in ("a3", "a2", "a1", "a0"):
        roots.add_argument(f"--{name}", type=float, required=True)

    classify = subs.add_parser("classify", help="classify a (gamma, delta) point")
    classify.add_argument("--gamma", type=float, required=True)
    classify.add_argument("--delta", type=float, required=True)
    classify.add_argument("--r", type=float, required=True)

    curve = subs.add_parser("curve", help="trace the region boundary curve as CSV")
    curve.add_argument("--r", type=float, required=True)
    curve.add_argument("--gamma-min", type=float, required=True)
    curve.add_argument("--gamma-max", type=float, required=True)
    curve.add_argument("--steps", type=int, required=True)

    cusps = subs.add_parser("cusps", help="cusp coordinates and tangent ray")
    cusps.add_argument("--r", type=float, required=True)

    bound = subs.add_parser("bound", help="finite-sample multimodality bound")
    bound.add_argument("--n", type=int, help="first sample size")
    bound.add_argument("--r", type=float, help="sample-size ratio n/m (alternative to --n)")
    bound.add_argument("--m", type=int, required=True, help="second sample size")
    bound.add_argument("--gamma", type=float, required=True,
                       help="population ratio sigma_x/sigma_y")

    simulate = subs.add_parser("simulate", help="Monte Carlo P(three roots), one point")
    _add_sim_flags(simulate, with_means=True)

    sweep = subs.add_parser("sweep", help="Monte Carlo sweep over mean differences")
    _add_sim_flags(sweep, with_means=False)
    sweep.add_argument("--deltas", required=True,
                       help="comma-separated mean differences (mu_x = delta, mu_y = 0)")

    return parser


_COMMANDS = {
    "fit": _cmd_fit,
    "roots": _cmd_roots,
    "classify": _cmd_classify,
    "curve": _cmd_curve,
    "cusps": _cmd_cusps,
    "bound": _cmd_bound,
    "simulate": _cmd_simulate,
    "sweep": _cmd_sweep,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args, parser)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    except BfmleError as exc:
        sys.stderr.write(f"bfmle: {exc}\n")
        return 3
    except OSError as exc:
        sys.stderr.write(f"bfmle: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
