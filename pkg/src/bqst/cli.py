"""Command-line entry point: ``bqst <subcommand> [options]``.

Every subcommand writes either CSV (``#`` metadata lines, one header row,
LF endings) or a JSON object ``{"schema_version", "config", "results"}``.
Floats are rounded to 12 significant digits and printed in shortest
round-trip form, so repeated runs are byte-identical.

Exit codes: 0 success, 1 domain or usage error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Any, Sequence

import numpy as np

from . import __version__
from .amplitude import fidelities, find_arrival
from .asymptotic import AsymptoticParams, maximize_u_infinity, scaling_constants, u_infinity
from .chain import ChainSpec, DomainError
from .dynamics import propagate
from .optimizer import fidelity_map, optimize
from .spectral import solve_modes
from .verify import run_checks

SCHEMA_VERSION = 1

# CSV column sets, versioned with SCHEMA_VERSION
COLUMNS = {
    "spectrum": ["m", "q", "omega", "density", "velocity"],
    "amplitude": ["t", "u"],
    "optimize": ["n", "mode", "fix_y", "x_opt", "y_opt", "u_opt", "F_opt", "F_E_opt",
                 "arrival_time", "delay", "evaluations", "converged", "boundary"],
    "fidelity-map": ["x", "y", "F"],
    "asymptotic": ["tau", "sigma", "u_inf", "F_inf"],
    "verify": ["check", "worst", "tolerance", "passed"],
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def fmt(value: Any) -> Any:
    """Round floats to 12 significant digits; leave everything else alone."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.12g}")
    return value


def _cell(value: Any) -> str:
    value = fmt(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def _range(text: str) -> tuple[float, float, int]:
    try:
        a, b, steps = text.split(":")
        return float(a), float(b), int(steps)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b:steps, got {text!r}") from None


def _window(text: str) -> tuple[float, float]:
    try:
        a, b = text.split(",")
        return float(a), float(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b, got {text!r}") from None


def default_threads() -> int:
    env = os.environ.get("BQST_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $BQST_THREADS or CPU count)")

    parser = _Parser(prog="bqst", description="Ballistic state transfer through quasi-uniform chains.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("spectrum", parents=[common], help="solved modes of a quasi-uniform chain")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)

    p = sub.add_parser("amplitude", parents=[common], help="|u(t)| trace and arrival peak")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--window", type=_window, help="time window a,b (default: n .. n + 10 n^(1/3) + 50)")

    p = sub.add_parser("optimize", parents=[common], help="optimal boundary couplings")
    p.add_argument("--n", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--fix-y", type=float, help="keep y fixed at this value, optimise x")
    group.add_argument("--constrain-Y", action="store_true", help="lock y to the bimodal threshold Y(x)")

    p = sub.add_parser("fidelity-map", parents=[common], help="average fidelity on an (x, y) grid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_range, required=True, metavar="A:B:STEPS")
    p.add_argument("--y", type=_range, required=True, metavar="A:B:STEPS")

    p = sub.add_parser("asymptotic", parents=[common], help="infinite-chain amplitude")
    p.add_argument("--tau", type=float)
    p.add_argument("--sigma", type=float)
    p.add_argument("--optimize", action="store_true", help="maximise over (tau, sigma)")

    p = sub.add_parser("dynamics", parents=[common], help="wavepacket |u_i(t)| over all sites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=float)
    p.add_argument("--y", type=float)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--perfect", action="store_true", help="perfect-transfer couplings")
    group.add_argument("--uniform", action="store_true", help="all couplings equal to 1")
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--dt", type=float, default=1.0)

    p = sub.add_parser("verify", parents=[common], help="analytic path against the dense oracle")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--cases", type=int, default=50)
    return parser


def _spectrum(args) -> tuple[list[dict], dict]:
    modes = solve_modes(ChainSpec.quasi_uniform(args.n, args.x, args.y))
    rows = [
        {"m": m2 / 2 if m2 % 2 else m2 // 2, "q": q, "omega": w, "density": p, "velocity": v}
        for m2, q, w, p, v in zip(modes.m2.tolist(), modes.q, modes.omega, modes.density, modes.velocity)
    ]
    return rows, {"density_sum": float(modes.density.sum())}


def _amplitude(args) -> tuple[list[dict], dict]:
    modes = solve_modes(ChainSpec.quasi_uniform(args.n, args.x, args.y))
    res = find_arrival(modes, args.window)
    rows = [{"t": t, "u": u} for t, u in zip(res.t_grid, res.u_values)]
    fid = res.fidelity
    summary = {
        "arrival_time": res.arrival_time,
        "delay": res.delay,
        "peak": res.peak_amplitude,
        "F": fid.average,
        "F_E": fid.entanglement,
    }
    return rows, summary


def _optimize(args) -> tuple[list[dict], dict]:
    if args.fix_y is not None:
        rep = optimize(args.n, "fixed_y", fix_y=args.fix_y, workers=args.threads)
    elif args.constrain_Y:
        rep = optimize(args.n, "constrained_Y", workers=args.threads)
    else:
        rep = optimize(args.n, "two_param", workers=args.threads)
    row = {
        "n": rep.n, "mode": rep.mode, "fix_y": rep.fix_y, "x_opt": rep.x_opt, "y_opt": rep.y_opt,
        "u_opt": rep.u_opt, "F_opt": rep.f_opt, "F_E_opt": rep.fe_opt,
        "arrival_time": rep.arrival_time, "delay": rep.delay, "evaluations": rep.evaluations,
        "converged": rep.converged, "boundary": rep.boundary,
    }
    return [row], {}


def _fidelity_map(args) -> tuple[list[dict], dict]:
    xa, xb, nx = args.x
    ya, yb, ny = args.y
    fmap = fidelity_map(args.n, (xa, xb), (ya, yb), (nx, ny), workers=args.threads)
    rows = [
        {"x": x, "y": y, "F": fmap.f_values[j, i]}
        for j, y in enumerate(fmap.y_grid)
        for i, x in enumerate(fmap.x_grid)
    ]
    bx, by = fmap.argmax()
    return rows, {"argmax_x": bx, "argmax_y": by, "max_F": float(fmap.f_values.max())}


def _asymptotic(args) -> tuple[list[dict], dict]:
    if args.optimize:
        if args.tau is not None or args.sigma is not None:
            raise DomainError("--optimize cannot be combined with --tau/--sigma")
        consts = scaling_constants(maximize_u_infinity())
        row = {"tau": consts.tau, "sigma": consts.sigma, "u_inf": consts.u_inf, "F_inf": consts.fidelity}
        summary = {"x_coeff": consts.x_coeff, "y_coeff": consts.y_coeff, "delay_coeff": consts.delay_coeff}
        return [row], summary
    if args.tau is None or args.sigma is None:
        raise DomainError("asymptotic needs either --optimize or both --tau and --sigma")
    value = u_infinity(AsymptoticParams(args.tau, args.sigma))
    f_inf = fidelities(value).average if 0.0 <= value <= 1.0 else None
    return [{"tau": args.tau, "sigma": args.sigma, "u_inf": value, "F_inf": f_inf}], {}


def _dynamics_spec(args) -> ChainSpec:
    if args.perfect:
        return ChainSpec.perfect_transfer(args.n)
    if args.uniform:
        return ChainSpec.uniform(args.n)
    if args.x is None or args.y is None:
        raise DomainError("dynamics needs --x and --y, or --perfect, or --uniform")
    return ChainSpec.quasi_uniform(args.n, args.x, args.y)


def _dynamics(args) -> tuple[list[dict], dict]:
    field = propagate(_dynamics_spec(args), args.t_max, args.dt)
    rows = []
    for t, amps in zip(field.times, field.amplitudes):
        row = {"t": t}
        row.update({f"u_{i + 1}": a for i, a in enumerate(amps)})
        rows.append(row)
    return rows, {"frames": len(field)}


def _verify(args) -> tuple[list[dict], dict]:
    checks = run_checks(n_max=args.n_max, count=args.cases)
    rows = [{"check": c.name, "worst": c.worst, "tolerance": c.tolerance, "passed": c.passed} for c in checks]
    return rows, {"all_passed": all(c.passed for c in checks)}


HANDLERS = {
    "spectrum": _spectrum,
    "amplitude": _amplitude,
    "optimize": _optimize,
    "fidelity-map": _fidelity_map,
    "asymptotic": _asymptotic,
    "dynamics": _dynamics,
    "verify": _verify,
}


def _config(args) -> dict:
    skip = {"output", "format", "threads"}
    config = {}
    for key, value in sorted(vars(args).items()):
        if key in skip:
            continue
        config[key] = [fmt(v) for v in value] if isinstance(value, tuple) else fmt(value)
    return config


def render(command: str, config: dict, rows: list[dict], summary: dict, fmt_name: str) -> str:
    if fmt_name == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "config": config,
            "results": {
                "summary": {k: fmt(v) for k, v in summary.items()},
                "rows": [{k: fmt(v) for k, v in row.items()} for row in rows],
            },
        }
        return json.dumps(doc, indent=2) + "\n"
    buf = io.StringIO()
    buf.write(f"# bqst {command} schema_version={SCHEMA_VERSION}\n")
    for key, value in config.items():
        buf.write(f"# config.{key}={_cell(value) if not isinstance(value, list) else ','.join(map(_cell, value))}\n")
    for key, value in summary.items():
        buf.write(f"# summary.{key}={_cell(value)}\n")
    columns = COLUMNS.get(command) or (list(rows[0]) if rows else [])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    if args.threads is None:
        args.threads = default_threads()
    try:
        rows, summary = HANDLERS[args.command](args)
    except DomainError as exc:
        print(f"bqst {args.command}: {exc}", file=sys.stderr)
        return 1
    text = render(args.command, _config(args), rows, summary, args.format)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.command == "verify":
        for row in rows:
            status = "PASS" if row["passed"] else "FAIL"
            print(f"{status} {row['check']}: worst={row['worst']:.3e} tol={row['tolerance']:.0e}", file=sys.stderr)
        if not summary["all_passed"]:
            return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
