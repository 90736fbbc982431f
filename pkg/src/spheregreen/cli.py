"""Command-line front end: ``eval``, ``modes`` and ``selftest``."""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import validation
from .appell import check_appell_params, green_appell
from .errors import GreenError
from .integral import check_integral_params, green_integral
from .params import Kind, make_context, params_from_a, params_from_L
from .quadrature import QuadratureConfig
from .series import green_series
from .solver import exact_green_coefficient, extract_green_coefficients

EVAL_COLUMNS = ("theta", "t", "method", "value", "error_estimate", "work")
MODES_COLUMNS = ("l", "extracted", "exact", "rel_err")


class UsageError(Exception):
    pass


def fmt(x) -> str:
    if isinstance(x, float):
        return format(x, ".17g")
    return str(x)


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("THREADS", "1")))
    except ValueError:
        return 1


def _params(args):
    ctx = make_context(args.n)
    if args.a is not None:
        return ctx, params_from_a(ctx, args.a)
    return ctx, params_from_L(ctx, args.L)


def theta_grid(args) -> list[float]:
    if args.theta is not None:
        if any(v is not None for v in (args.theta_min, args.theta_max, args.theta_steps)):
            raise UsageError("give either --theta or --theta-min/--theta-max/--theta-steps")
        grid = [args.theta]
    else:
        if args.theta_min is None:
            raise UsageError("give --theta or a --theta-min/--theta-max/--theta-steps grid")
        tmax = args.theta_max if args.theta_max is not None else math.pi
        steps = args.theta_steps if args.theta_steps is not None else 1
        if steps < 1:
            raise UsageError("--theta-steps must be at least 1")
        grid = [args.theta_min] if steps == 1 else list(np.linspace(args.theta_min, tmax, steps))
    for th in grid:
        if not 0.0 < th <= math.pi:
            raise UsageError(f"theta={th} lies outside (0, pi]; theta = 0 is excluded "
                             "(the Green function is singular there)")
    return [float(th) for th in grid]


def _routes(ctx, params, method):
    if method != "all":
        return [method]
    routes = ["series"]
    try:
        check_integral_params(params)
        routes.append("integral")
    except GreenError:
        pass
    try:
        check_appell_params(ctx, params)
        routes.append("appell")
    except GreenError:
        pass
    return routes


def _evaluate(route, ctx, params, theta, args, qc):
    if route == "series":
        return green_series(ctx, params, theta, lmax=args.lmax)
    if route == "integral":
        return green_integral(ctx, params, theta, qc)
    return green_appell(ctx, params, theta, qc)


def _row(theta, method, value, estimate, work):
    return {"theta": theta, "t": math.cos(theta), "method": method,
            "value": value, "error_estimate": estimate, "work": work}


def cmd_eval(args) -> tuple[list[dict], bool]:
    ctx, params = _params(args)
    grid = theta_grid(args)
    qc = QuadratureConfig(tol=args.tol)
    routes = _routes(ctx, params, args.method)
    if args.method == "integral":
        check_integral_params(params)
    elif args.method == "appell":
        check_appell_params(ctx, params)

    def one_theta(theta):
        rows, failed = [], False
        ok_values = []
        for route in routes:
            try:
                ev = _evaluate(route, ctx, params, theta, args, qc)
            except GreenError as exc:
                print(f"error: {route} at theta={theta}: {type(exc).__name__}: {exc}",
                      file=sys.stderr)
                rows.append(_row(theta, route, math.nan, math.nan, 0))
                failed = True
                continue
            rows.append(_row(theta, route, ev.value, ev.error_estimate, ev.work))
            ok_values.append(ev)
        if args.method == "all" and len(ok_values) > 1:
            worst = max(itertools.combinations(ok_values, 2),
                        key=lambda pair: abs(pair[0].value - pair[1].value))
            rows.append(_row(theta, "max_discrepancy", abs(worst[0].value - worst[1].value),
                             worst[0].error_estimate + worst[1].error_estimate, 0))
        return rows, failed

    with ThreadPoolExecutor(max_workers=_workers()) as pool:
        results = list(pool.map(one_theta, grid))
    rows = [r for chunk, _ in results for r in chunk]
    return rows, any(failed for _, failed in results)


def parse_degrees(text: str) -> list[int]:
    """``"0-5"``, ``"1,3,7"`` or a mix such as ``"0-2,10"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def cmd_modes(args) -> tuple[list[dict], bool]:
    ctx, params = _params(args)
    qc = QuadratureConfig(tol=args.tol)
    degrees = parse_degrees(args.l)
    if params.kind is Kind.COMPLEX_L:
        def green(theta):
            return green_series(ctx, params, theta, lmax=args.lmax).value
    else:
        check_integral_params(params)

        def green(theta):
            return green_integral(ctx, params, theta, qc).value

    support = [l for l in degrees if 2 * l + 16 <= args.nodes]
    extracted = dict(zip(support, extract_green_coefficients(ctx, green, support, args.nodes)))
    rows, failed = [], False
    for l in degrees:
        if l not in extracted:
            print(f"error: l={l}: AccuracyError: degree exceeds the quadrature support "
                  f"of {args.nodes} nodes (need 2l+16)", file=sys.stderr)
            rows.append({"l": l, "extracted": math.nan, "exact": "AccuracyError",
                         "rel_err": math.nan})
            failed = True
            continue
        g = float(extracted[l])
        if l == params.resonant_degree:
            label = "omitted (l=L)" if params.kind is Kind.RESONANT else "omitted (l=0)"
            rows.append({"l": l, "extracted": g, "exact": label, "rel_err": abs(g)})
        else:
            exact = exact_green_coefficient(params, l)
            rows.append({"l": l, "extracted": g, "exact": exact,
                         "rel_err": abs(g - exact) / abs(exact)})
    return rows, failed


def write_rows(rows, columns, fmt_name, stream):
    if fmt_name == "json":
        def clean(v):
            return None if isinstance(v, float) and not math.isfinite(v) else v
        json.dump([{c: clean(r[c]) for c in columns} for r in rows], stream, indent=1)
        stream.write("\n")
        return
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([fmt(r[c]) for c in columns])


def _emit(rows, columns, args):
    if args.output:
        with open(args.output, "w", newline="") as fh:
            write_rows(rows, columns, args.format, fh)
    else:
        write_rows(rows, columns, args.format, sys.stdout)


def cmd_selftest(args) -> int:
    if args.only is None:
        selected = None
    else:
        selected = [s.strip() for s in args.only.split(",") if s.strip()]
        unknown = [s for s in selected if s not in validation.CRITERIA]
        if unknown:
            raise UsageError(f"unknown criteria {unknown}; choose from {list(validation.CRITERIA)}")
        if not selected:
            print("no criteria selected")
            return 0
    results = validation.run(selected, tol=args.tol)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 1 if failed else 0


def _add_problem_flags(p):
    p.add_argument("--n", type=int, required=True, help="sphere dimension (S^n)")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--a", type=float, help="Helmholtz shift a")
    g.add_argument("--L", type=float, help="root L of a = L(n + L - 1)")
    p.add_argument("--lmax", type=int, default=2000, help="series length floor")
    p.add_argument("--tol", type=float, default=1e-10, help="quadrature tolerance")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spheregreen",
        description="Green functions of the Helmholtz and Poisson equations on S^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate G on a theta grid")
    _add_problem_flags(ev)
    ev.add_argument("--theta", type=float)
    ev.add_argument("--theta-min", type=float)
    ev.add_argument("--theta-max", type=float)
    ev.add_argument("--theta-steps", type=int)
    ev.add_argument("--method", choices=("series", "integral", "appell", "all"),
                    default="integral")

    mo = sub.add_parser("modes", help="extract Gegenbauer coefficients of G")
    _add_problem_flags(mo)
    mo.add_argument("--l", default="0-10", help="degrees, e.g. 0-5 or 1,3,7")
    mo.add_argument("--nodes", type=int, default=64, help="angular quadrature nodes")

    st = sub.add_parser("selftest", help="run the validation suite")
    st.add_argument("--tol", type=float, default=1e-10)
    st.add_argument("--only", help="comma-separated criterion ids; empty selects none")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "selftest":
            return cmd_selftest(args)
        if args.command == "eval":
            rows, failed = cmd_eval(args)
            _emit(rows, EVAL_COLUMNS, args)
        else:
            rows, failed = cmd_modes(args)
            _emit(rows, MODES_COLUMNS, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GreenError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
