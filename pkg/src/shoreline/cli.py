"""Command-line front end.

Grammar:

    shoreline spiral   {minmax|minmean|eval} [--kappa F] [--R F] [--format FMT]
    shoreline coil     {minmax|minmean|mixed|eval} [--gamma F] [--X F] [--format FMT]
    shoreline simulate {spiral|coil|mixed} [--kappa F] [--gamma F] [--X F]
                       [-n INT] [--seed INT] [--march-step F] [--format FMT]
    shoreline plot-data {delta-ratio|I|spiral-path} [--gamma F] [--kappa F]
                       --range LO:HI [--points INT] --out PATH
    shoreline check

FMT is text (default, 10 significant digits), json, or csv (17 significant
digits, shortest round-trip).  Exit codes: 0 success, 1 numerical failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence

import numpy as np

from . import checks, golden
from .coil import (Coil, average_ratio, mixed_expected_ratio, optimal_minmax_coil,
                   optimal_minmean_coil, optimal_mixed, travel_distance)
from .numerics import NumericalError, uniform_block
from .simulate import (SimConfig, coil_marching_distance, mixed_strategy_sample,
                       monte_carlo_mean_arclength, summarize)
from .spiral_geometry import Spiral, second_contact
from .spiral_objectives import (minimize_minmax, minimize_minmean, minmax_objective,
                                minmean_objective, erroneous_objective,
                                solve_minmax_system, solve_minmean_system)

__all__ = ["main", "OutputRecord"]


@dataclass
class OutputRecord:
    """One command's output: stable result names, finite reals only."""

    command: str
    parameters: Dict[str, object] = field(default_factory=dict)
    results: Dict[str, object] = field(default_factory=dict)
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, object]:
        return {"command": self.command, "parameters": dict(self.parameters),
                "results": dict(self.results), "diagnostics": dict(self.diagnostics)}


def _fmt_text(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def _fmt_csv(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def emit(record: OutputRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record.to_dict(), sort_keys=True)
    if fmt == "csv":
        keys, vals = ["command"], [record.command]
        for k, v in record.parameters.items():
            keys.append(f"param.{k}")
            vals.append(_fmt_csv(v))
        for k, v in record.results.items():
            keys.append(k)
            vals.append(_fmt_csv(v))
        return ",".join(keys) + "\n" + ",".join(str(v) for v in vals) + "\n"
    lines = [f"command = {record.command}"]
    lines += [f"param.{k} = {_fmt_text(v)}" for k, v in record.parameters.items()]
    lines += [f"{k} = {_fmt_text(v)}" for k, v in record.results.items()]
    lines += [f"diag.{k} = {_fmt_text(v)}" for k, v in record.diagnostics.items()]
    return "\n".join(lines) + "\n"


def _cmd_spiral(args: argparse.Namespace) -> OutputRecord:
    R = args.R
    rec = OutputRecord(command=f"spiral {args.mode}", parameters={"R": R})
    if args.mode == "eval":
        if args.kappa is None:
            raise ValueError("spiral eval requires --kappa")
        k = args.kappa
        rec.parameters["kappa"] = k
        contact = second_contact(Spiral(k, R))
        rec.results = {
            "theta0": contact.theta0,
            "omega0": contact.omega0,
            "theta1": contact.theta1,
            "minmax_objective": R * minmax_objective(k),
            "minmean_objective": R * minmean_objective(k),
            "erroneous_objective": R * erroneous_objective(k),
        }
        rec.diagnostics = {"converged": True}
        return rec

    if args.mode == "minmax":
        opt = minimize_minmax()
        pair = solve_minmax_system()
        system_obj = 1.0 / (math.sin(pair.alpha) * math.cos(pair.beta))
    else:
        opt = minimize_minmean()
        pair = solve_minmean_system()
        w = ((1.0 / math.cos(pair.beta) - 1.0 / math.cos(pair.alpha)) / math.tan(pair.alpha)
             + math.log(1.0 / math.cos(pair.alpha) + math.tan(pair.alpha))
             + math.log(1.0 / math.cos(pair.beta) + math.tan(pair.beta)))
        system_obj = w / math.sin(pair.alpha) / (2.0 * math.pi)
    rec.results = {
        "kappa": opt.kappa,
        "objective": R * opt.objective_value,
        "alpha": opt.alpha,
        "beta": opt.beta,
        "exp_kappa": math.exp(opt.kappa),
        "system_kappa": math.tan(pair.alpha),
        "system_objective": R * system_obj,
        "route_gap_kappa": abs(math.tan(pair.alpha) - opt.kappa),
        "route_gap_objective": R * abs(system_obj - opt.objective_value),
    }
    rec.diagnostics = {"iterations": opt.report.iterations,
                       "converged": opt.report.converged}
    return rec


def _cmd_coil(args: argparse.Namespace) -> OutputRecord:
    rec = OutputRecord(command=f"coil {args.mode}")
    if args.mode == "minmax":
        gamma, ratio = optimal_minmax_coil()
        rec.results = {"gamma": gamma, "ratio": ratio}
    elif args.mode == "minmean":
        opt = optimal_minmean_coil()
        rec.results = {
            "gamma_for_min": opt.gamma_for_min, "mean_min": opt.mean_min,
            "gamma_for_max": opt.gamma_for_max, "mean_max": opt.mean_max,
        }
    elif args.mode == "mixed":
        strat = optimal_mixed()
        rec.results = {"gamma": strat.gamma, "expected_ratio": strat.expected_ratio}
    else:
        if args.gamma is None or args.X is None:
            raise ValueError("coil eval requires --gamma and --X")
        coil = Coil(args.gamma)
        hit = travel_distance(coil, args.X)
        rec.parameters = {"gamma": args.gamma, "X": args.X}
        rec.results = {
            "delta": hit.delta,
            "ratio": hit.delta / abs(args.X),
            "bracket_index": hit.index,
            "average_ratio": average_ratio(coil, abs(args.X)),
        }
    rec.diagnostics = {"converged": True}
    return rec


def _cmd_simulate(args: argparse.Namespace) -> OutputRecord:
    cfg = SimConfig(seed=args.seed, samples=args.n, march_step=args.march_step)
    rec = OutputRecord(command=f"simulate {args.target}",
                       parameters={"n": args.n, "seed": args.seed})
    if args.target == "spiral":
        if args.kappa is None:
            raise ValueError("simulate spiral requires --kappa")
        rec.parameters["kappa"] = args.kappa
        rec.parameters["march_step"] = args.march_step
        stats = monte_carlo_mean_arclength(args.kappa, cfg)
        reference = minmean_objective(args.kappa)
    elif args.target == "coil":
        if args.gamma is None:
            raise ValueError("simulate coil requires --gamma")
        x0 = args.X if args.X is not None else 1.0
        if x0 <= 0.0:
            raise ValueError("simulate coil requires --X > 0")
        rec.parameters["gamma"] = args.gamma
        rec.parameters["X"] = x0
        draws = uniform_block(args.seed, 0, args.n, -x0, x0)
        ratios = np.empty(args.n)
        for idx, xv in enumerate(draws):
            xv = float(xv) if xv != 0.0 else x0  # measure-zero draw at the origin
            ratios[idx] = coil_marching_distance(args.gamma, xv, cfg) / abs(xv)
        stats = summarize(ratios)
        reference = average_ratio(Coil(args.gamma), x0)
    else:
        if args.gamma is None:
            raise ValueError("simulate mixed requires --gamma")
        x0 = args.X if args.X is not None else 1.0
        rec.parameters["gamma"] = args.gamma
        rec.parameters["X"] = x0
        stats = mixed_strategy_sample(args.gamma, x0, cfg)
        reference = mixed_expected_ratio(args.gamma).expected_ratio
    z = (stats.mean - reference) / stats.std_error if stats.std_error > 0.0 else 0.0
    rec.results = {
        "mean": stats.mean, "std_error": stats.std_error, "n": stats.n,
        "min": stats.min, "max": stats.max,
        "reference": reference, "z_score": z,
    }
    rec.diagnostics = {"converged": True}
    return rec


def _parse_range(text: str):
    try:
        lo_s, hi_s = text.split(":", 1)
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise ValueError("--range must be LO:HI with numeric bounds") from None
    if not lo < hi:
        raise ValueError("--range requires LO < HI")
    return lo, hi


def _cmd_plot_data(args: argparse.Namespace) -> str:
    lo, hi = _parse_range(args.range)
    if args.points < 2:
        raise ValueError("--points must be at least 2")
    grid = np.linspace(lo, hi, args.points)
    if args.figure == "delta-ratio":
        if args.gamma is None:
            raise ValueError("plot-data delta-ratio requires --gamma")
        coil = Coil(args.gamma)
        rows = [(float(x), travel_distance(coil, float(x)).delta / abs(x))
                for x in grid if x != 0.0]
        header = "X,ratio"
    elif args.figure == "I":
        if args.gamma is None:
            raise ValueError("plot-data I requires --gamma")
        if lo <= 0.0:
            raise ValueError("the normalized average needs X > 0")
        coil = Coil(args.gamma)
        rows = [(float(x), average_ratio(coil, float(x))) for x in grid]
        header = "X,I"
    else:
        if args.kappa is None:
            raise ValueError("plot-data spiral-path requires --kappa")
        k = args.kappa
        rows = [(float(t), math.exp(k * t) * math.cos(t), math.exp(k * t) * math.sin(t))
                for t in grid]
        header = "theta,x,y"
    lines = [header]
    lines += [",".join(repr(float(v)) for v in row) for row in rows]
    payload = "\n".join(lines) + "\n"
    with open(args.out, "w", newline="") as fh:
        fh.write(payload)
    return f"wrote {len(rows)} rows to {args.out}\n"


def _cmd_check() -> int:
    results = checks.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} criterion {r.criterion:2d}: {r.name} ({r.seconds:.2f}s) - {r.detail}")
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shoreline",
        description="Optimal spiral and coil search paths for an unknown shoreline.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def add_format(p):
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p_spiral = sub.add_parser("spiral", help="spiral optima and point evaluation")
    p_spiral.add_argument("mode", choices=["minmax", "minmean", "eval"])
    p_spiral.add_argument("--kappa", type=float)
    p_spiral.add_argument("--R", type=float, default=1.0,
                          help="shoreline distance; scales lengths only")
    add_format(p_spiral)

    p_coil = sub.add_parser("coil", help="coil optima and point evaluation")
    p_coil.add_argument("mode", choices=["minmax", "minmean", "mixed", "eval"])
    p_coil.add_argument("--gamma", type=float)
    p_coil.add_argument("--X", type=float)
    add_format(p_coil)

    p_sim = sub.add_parser("simulate", help="Monte Carlo / marching verification runs")
    p_sim.add_argument("target", choices=["spiral", "coil", "mixed"])
    p_sim.add_argument("--kappa", type=float)
    p_sim.add_argument("--gamma", type=float)
    p_sim.add_argument("--X", type=float)
    p_sim.add_argument("-n", type=int, default=100_000, help="sample count")
    p_sim.add_argument("--seed", type=int, default=golden.CHECK_SEED)
    p_sim.add_argument("--march-step", type=float, default=golden.MC_MARCH_STEP)
    add_format(p_sim)

    p_plot = sub.add_parser("plot-data", help="emit CSV curve data (no rendering)")
    p_plot.add_argument("figure", choices=["delta-ratio", "I", "spiral-path"])
    p_plot.add_argument("--gamma", type=float)
    p_plot.add_argument("--kappa", type=float)
    p_plot.add_argument("--range", required=True,
                        help="LO:HI in X (delta-ratio, I) or theta (spiral-path); "
                             "write --range=-10:5 when LO is negative")
    p_plot.add_argument("--points", type=int, default=512)
    p_plot.add_argument("--out", required=True)

    sub.add_parser("check", help="run the acceptance suite")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if "--check" in argv:  # convenience alias for the check subcommand
        argv = ["check"]
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cmd == "check":
            return _cmd_check()
        if args.cmd == "plot-data":
            sys.stdout.write(_cmd_plot_data(args))
            return 0
        if args.cmd == "spiral":
            record = _cmd_spiral(args)
        elif args.cmd == "coil":
            record = _cmd_coil(args)
        else:
            record = _cmd_simulate(args)
        sys.stdout.write(emit(record, args.format))
        return 0
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NumericalError, AssertionError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
