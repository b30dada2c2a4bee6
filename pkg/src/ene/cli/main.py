"""``ene`` command line.

Exit status: 0 on success, 1 when a verification fails, 2 on usage, parse
or evaluation errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from ..euler import euler_table
from ..jsonio import to_json
from ..limits import RegionError, SampleRegion, collapse_witness, euler_limit_study
from ..series import DEFAULT_ORDER, render_series
from ..transalg import TransalgebraicFunction
from .evaluate import EvalError, RunConfig, evaluate_text, to_series
from .parser import ParseError
from .verify import SUITES, run_suite

__all__ = ["build_parser", "format_euler_table", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def format_euler_table(kmax: int, fmt: str) -> str:
    rows = euler_table(kmax)
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    width = len(str(kmax))
    return "".join(f"R_{row['k']:<{width}} = {row['R']}\n" for row in rows)


def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order (default 16)")
    p.add_argument("--epsilon", type=float, default=0.1, help="exclusion radius for grids (default 0.1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ene", description="Exact eñe products and transalgebraic functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("ene", help="eñe product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    _common(p)

    p = sub.add_parser("series", help="power series of an expression")
    p.add_argument("expr")
    _common(p)

    p = sub.add_parser("euler-table", help="Euler's rational functions R_1..R_K")
    p.add_argument("kmax", type=int)
    _common(p)

    p = sub.add_parser("verify", help="run an identity-checking suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    _common(p)

    p = sub.add_parser("limit", help="Euler limit convergence study")
    p.add_argument("--expr", required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--kmin", type=int, default=64)
    p.add_argument("--grid", default="circle:0,0,0.5,64;circle:0,0,3,64",
                   help="items circle:cx,cy,r,n or rect:x0,y0,x1,y1,nx,ny joined by ';'")
    _common(p)
    return parser


def _emit_value(v, fmt: str, out):
    if fmt == "json":
        out.write(json.dumps(v.json(), indent=2) + "\n")
    else:
        out.write(v.text() + "\n")


def _run(args, out) -> int:
    cfg = RunConfig(order=args.order, format=args.format, epsilon=args.epsilon)
    if args.order < 0:
        raise EvalError("--order must be nonnegative")
    cmd = args.command
    if cmd == "eval":
        _emit_value(evaluate_text(args.expr, cfg), args.format, out)
    elif cmd == "ene":
        _emit_value(evaluate_text(f"ene({args.left}, {args.right})", cfg), args.format, out)
    elif cmd == "series":
        s = to_series(evaluate_text(args.expr, cfg), cfg)
        if args.format == "json":
            out.write(json.dumps({"kind": "series", "value": to_json(s), "text": render_series(s)}, indent=2) + "\n")
        else:
            out.write(render_series(s) + "\n")
    elif cmd == "euler-table":
        if args.kmax < 1:
            raise EvalError("euler-table needs K >= 1")
        out.write(format_euler_table(args.kmax, args.format))
    elif cmd == "verify":
        options = {}
        if args.max_k is not None:
            if args.suite not in ("euler", "polylog"):
                raise EvalError("--max-k applies to the euler and polylog suites")
            options["max_k"] = args.max_k
        if args.suite in ("ring", "generators", "bridge"):
            options["seed"] = args.seed
        report = run_suite(args.suite, cfg, **options)
        if args.format == "json":
            out.write(json.dumps(report, indent=2) + "\n")
        else:
            status = "PASS" if report["passed"] else "FAIL"
            out.write(f"{status} {report['suite']}: {report['checks']} checks, {report['failure_count']} failures\n")
            for failure in report["failures"]:
                out.write("  " + ", ".join(f"{k}={v}" for k, v in failure.items()) + "\n")
        return EXIT_OK if report["passed"] else EXIT_FAIL
    elif cmd == "limit":
        _limit(args, cfg, out)
    return EXIT_OK


def _limit(args, cfg, out):
    v = evaluate_text(args.expr, cfg)
    if v.kind == "rational":
        f = TransalgebraicFunction(v.data)
    elif v.kind == "transalgebraic":
        f = v.data
    else:
        raise EvalError("limit needs a rational or R0*exp(R1) expression")
    if args.kmin < 1 or args.kmax < args.kmin:
        raise EvalError("need 1 <= kmin <= kmax")
    ks = []
    k = args.kmin
    while k <= args.kmax:
        ks.append(k)
        k *= 2
    region = SampleRegion.parse(args.grid, cfg.epsilon)
    report = euler_limit_study(f, ks, region)
    payload = {"convergence": to_json(report)}
    if not f.exp.is_zero():
        payload["collapse"] = to_json(collapse_witness(f, ks[-1]))
    if args.format == "json":
        out.write(json.dumps(payload, indent=2) + "\n")
        return
    out.write(f"{'k':>8}  {'sup error':>14}  {'ratio':>8}  {'hausdorff':>12}\n")
    ratios = [None] + report.ratios()
    for i, (k, e) in enumerate(zip(report.ks, report.errors)):
        r = "" if ratios[i] is None else f"{ratios[i]:.4f}"
        h = f"{report.hausdorff[i]:.6e}" if report.hausdorff else ""
        out.write(f"{k:>8}  {e:>14.6e}  {r:>8}  {h:>12}\n")
    slope = report.decay_exponent
    out.write("fitted decay exponent: " + ("n/a" if math.isnan(slope) else f"{slope:.4f}") + "\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (ParseError, EvalError, RegionError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
