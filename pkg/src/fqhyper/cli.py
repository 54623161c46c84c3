"""Command line front end: G-evaluation, point counting, suite runs.

Field elements are written as comma-separated base-p coefficients, lowest
degree first ("3,1" is 3 + x in F_{p^2}); rationals as exact "num/den"
strings.  There is no floating-point input anywhere.

Exit codes: 0 all requested checks passed (or value printed), 1 at least
one check failed, 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .characters import char_group
from .fields import make_field
from .hypergeo import gn_eval
from .padics import default_precision, working_precision
from .varieties import (DiagonalSurfaceParams, HessianCurve, WeierstrassCurve,
                        count_affine_N, count_projective_D, ec_count,
                        hessian_count, r_q, r_q_prime)
from .verify import GridConfig, run_suite


class CliError(Exception):
    pass


def _parse_fractions(text: str) -> list[Fraction]:
    out = []
    for part in text.split(","):
        part = part.strip()
        try:
            out.append(Fraction(part))
        except (ValueError, ZeroDivisionError) as e:
            raise CliError(f"bad rational {part!r}: {e}") from None
    return out


def _field(args):
    try:
        return make_field(args.p, args.r)
    except ValueError as e:
        raise CliError(str(e)) from None


def _element(field, text: str, name: str):
    try:
        return field.parse_elem(text)
    except ValueError as e:
        raise CliError(f"bad {name}: {e}") from None


def cmd_gn(args) -> int:
    field = _field(args)
    top = _parse_fractions(args.top)
    bottom = _parse_fractions(args.bottom)
    for x in top + bottom:
        if x.denominator % args.p == 0:
            raise CliError(f"parameter {x}: denominator divisible by p={args.p}")
    if len(top) != len(bottom):
        raise CliError("top and bottom lists must have the same length")
    t = _element(field, args.t, "t")
    M = args.precision or working_precision(args.p, args.r)
    if M < default_precision(args.p, args.r):
        print(f"warning: precision {M} is below the integer-recovery "
              f"threshold {default_precision(args.p, args.r)}", file=sys.stderr)
    group = char_group(args.p, args.r, M)
    v = gn_eval(group, top, bottom, t.idx)
    n = len(top)
    tops = ",".join(str(x) for x in top)
    bots = ",".join(str(x) for x in bottom)
    print(f"{n}G{n}[{tops}; {bots} | {args.t}]  over F_{args.p}^{args.r}, "
          f"precision {args.p}^{M}")
    print(f"value: {v.str_value()}")
    return 0


def cmd_count(args) -> int:
    field = _field(args)
    if args.kind == "dsurface":
        lam = _element(field, args.lam, "lambda")
        try:
            params = DiagonalSurfaceParams(args.d, args.k, lam.idx)
            params.check(field)
        except ValueError as e:
            raise CliError(str(e)) from None
        print(f"dsurface p={args.p} r={args.r} d={args.d} k={args.k} "
              f"lambda={args.lam}")
        print(f"projective = {count_projective_D(field, params)}")
        print(f"affine = {count_affine_N(field, params)}")
        print(f"r_q = {r_q(field, params)}")
        print(f"r_q' = {r_q_prime(field, params)}")
    elif args.kind == "ec":
        a2 = _element(field, args.a2, "a2")
        a4 = _element(field, args.a4, "a4")
        a6 = _element(field, args.a6, "a6")
        try:
            npoints, aq = ec_count(field, WeierstrassCurve(a2.idx, a4.idx, a6.idx))
        except ValueError as e:
            raise CliError(str(e)) from None
        print(f"ec p={args.p} r={args.r} a2={args.a2} a4={args.a4} a6={args.a6}")
        print(f"points = {npoints}")
        print(f"a_q = {aq}")
    else:
        a = _element(field, args.a, "a")
        try:
            n = hessian_count(field, HessianCurve(a.idx))
        except ValueError as e:
            raise CliError(str(e)) from None
        print(f"hessian p={args.p} r={args.r} a={args.a}")
        print(f"affine points = {n}")
    return 0


def cmd_verify(args) -> int:
    threads = args.threads
    env = os.environ.get("FQHYPER_THREADS")
    if env:
        try:
            threads = int(env)
        except ValueError:
            raise CliError(f"bad FQHYPER_THREADS value {env!r}") from None
    cfg = GridConfig(suites=tuple(args.suite.split(",")),
                     pmax=args.pmax, rmax=args.rmax, dmax=args.dmax,
                     precision=args.precision, threads=max(1, threads),
                     timings=args.timings)
    try:
        report = run_suite(cfg)
    except ValueError as e:
        raise CliError(str(e)) from None
    if args.format == "json":
        text = report.to_json(timings=args.timings)
    elif args.format == "csv":
        text = report.to_csv(timings=args.timings)
    else:
        text = report.to_plain()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    print(f"pass={s['pass']} fail={s['fail']} skip={s['skip']}", file=sys.stderr)
    return 1 if report.failed else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="fqhyper",
        description="exact finite-field / p-adic hypergeometric toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    gn = sub.add_parser("gn", help="evaluate the p-adic hypergeometric function")
    gn.add_argument("--p", type=int, required=True)
    gn.add_argument("--r", type=int, default=1)
    gn.add_argument("--top", required=True,
                    help="comma-separated exact fractions, e.g. 1/4,3/4")
    gn.add_argument("--bottom", required=True)
    gn.add_argument("--t", required=True,
                    help="field element: base-p coefficients, lowest first")
    gn.add_argument("--precision", type=int, default=None)
    gn.set_defaults(fn=cmd_gn)

    ct = sub.add_parser("count", help="brute-force point counts")
    ctsub = ct.add_subparsers(dest="kind", required=True)
    ds = ctsub.add_parser("dsurface")
    ds.add_argument("--p", type=int, required=True)
    ds.add_argument("--r", type=int, default=1)
    ds.add_argument("--d", type=int, required=True)
    ds.add_argument("--k", type=int, required=True)
    ds.add_argument("--lambda", dest="lam", required=True)
    ds.set_defaults(fn=cmd_count)
    ec = ctsub.add_parser("ec")
    ec.add_argument("--p", type=int, required=True)
    ec.add_argument("--r", type=int, default=1)
    ec.add_argument("--a2", default="0")
    ec.add_argument("--a4", required=True)
    ec.add_argument("--a6", required=True)
    ec.set_defaults(fn=cmd_count)
    hs = ctsub.add_parser("hessian")
    hs.add_argument("--p", type=int, required=True)
    hs.add_argument("--r", type=int, default=1)
    hs.add_argument("--a", required=True)
    hs.set_defaults(fn=cmd_count)

    vf = sub.add_parser("verify", help="run identity check suites")
    vf.add_argument("--suite", default="all",
                    help="comma-separated check ids or prefixes (default: all)")
    vf.add_argument("--pmax", type=int, default=None)
    vf.add_argument("--rmax", type=int, default=None)
    vf.add_argument("--dmax", type=int, default=None)
    vf.add_argument("--precision", type=int, default=None)
    vf.add_argument("--out", default=None)
    vf.add_argument("--format", choices=("json", "csv", "plain"), default="json")
    vf.add_argument("--threads", type=int, default=1,
                    help="worker threads (FQHYPER_THREADS overrides)")
    vf.add_argument("--timings", action="store_true",
                    help="include wall times in the report (breaks "
                         "byte-for-byte determinism)")
    vf.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
