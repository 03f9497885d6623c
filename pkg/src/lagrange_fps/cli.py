"""Command-line front end: ``lagrange-fps {series,limit,inverse,check-theorem2,arnold}``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .errors import SeriesError
from .expr import (
    DEFAULT_PRECISION,
    MAX_PRECISION,
    Finite,
    SignedInfinity,
    TwoSidedDivergence,
    UndeterminedAtPrecision,
    evaluate,
    limit_ratio,
    parse,
)
from .inversion import lagrange_inverse
from .series_core import format_series
from .theorem import ord_lead, run_trials

ARNOLD_NUMERATOR = "sin(tan(x)) - tan(sin(x))"
ARNOLD_DENOMINATOR = "asin(atan(x)) - atan(asin(x))"
ARNOLD_LEADING = (7, Fraction(-1, 30))


def series_json(f):
    return {"precision": f.precision, "coeffs": [str(c) for c in f.coeffs]}


def limit_json(result):
    if isinstance(result, Finite):
        return {"kind": "finite", "value": str(result.value)}
    if isinstance(result, SignedInfinity):
        return {"kind": "signed_infinity", "sign": result.sign, "gap": result.gap}
    if isinstance(result, TwoSidedDivergence):
        return {"kind": "two_sided_divergence", "gap": result.gap}
    if isinstance(result, UndeterminedAtPrecision):
        return {"kind": "undetermined", "reached_order": result.reached_order}
    raise TypeError(result)


def limit_text(result):
    if isinstance(result, Finite):
        return str(result.value)
    if isinstance(result, SignedInfinity):
        return f"{'+' if result.sign > 0 else '-'}inf (order gap {result.gap})"
    if isinstance(result, TwoSidedDivergence):
        return f"two-sided divergence (order gap {result.gap})"
    return f"undetermined at order {result.reached_order}"


def _order(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 1 <= n <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"order must be in 1..{MAX_PRECISION}")
    return n


def _positive(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _emit(args, payload, text):
    print(json.dumps(payload) if args.json else text)


def cmd_series(args):
    f = evaluate(parse(args.expr), args.order)
    _emit(args, series_json(f), format_series(f))
    return 0


def cmd_inverse(args):
    g = lagrange_inverse(evaluate(parse(args.expr), args.order))
    _emit(args, series_json(g), format_series(g))
    return 0


def cmd_limit(args):
    if args.order > args.max_order:
        raise argparse.ArgumentTypeError("--order may not exceed --max-order")
    result = limit_ratio(parse(args.num), parse(args.den), args.order, args.max_order)
    _emit(args, limit_json(result), limit_text(result))
    return 0


def cmd_check_theorem2(args):
    if args.order < 2:
        raise argparse.ArgumentTypeError("--order must be at least 2 for distinct pairs")
    summary = run_trials(args.trials, args.seed, args.coeff_bound, order=args.order)
    if args.json:
        print(json.dumps({
            "trials": summary.trials, "held": summary.held,
            "order": args.order, "seed": args.seed, "coeff_bound": args.coeff_bound,
        }))
    else:
        print(f"{summary.held}/{summary.trials} hold")
        for f, g, report in summary.failures:
            print(f"FAILED f={format_series(f)} g={format_series(g)} {report}")
    return 0 if summary.ok else 1


def cmd_arnold(args):
    sides = []
    for label, text in (("numerator", ARNOLD_NUMERATOR), ("denominator", ARNOLD_DENOMINATOR)):
        f = evaluate(parse(text), args.order)
        lead = ord_lead(f)
        sides.append((label, text, f, lead))
    result = limit_ratio(parse(ARNOLD_NUMERATOR), parse(ARNOLD_DENOMINATOR), args.order, MAX_PRECISION)
    ok = result == Finite(Fraction(1)) and all(
        (lead.order, lead.leading) == ARNOLD_LEADING for *_, lead in sides
    )
    if args.json:
        payload = {"order": args.order}
        for label, text, f, lead in sides:
            payload[label] = {
                "expr": text, "series": series_json(f),
                "order": lead.order, "leading": str(lead.leading),
            }
        payload["limit"] = limit_json(result)
        payload["ok"] = ok
        print(json.dumps(payload))
    else:
        for label, text, f, lead in sides:
            print(f"{label}: {text}")
            print(f"  series:       {format_series(f)}")
            print(f"  leading term: {lead.leading} x^{lead.order}")
        print(f"limit = {limit_text(result)}")
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lagrange-fps",
        description="Exact power series, Lagrange inversion and limits at 0.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("series", parents=[common], help="print the series of an expression")
    p.add_argument("expr")
    p.add_argument("--order", type=_order, default=DEFAULT_PRECISION)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("inverse", parents=[common], help="compositional inverse of an expression")
    p.add_argument("expr")
    p.add_argument("--order", type=_order, default=DEFAULT_PRECISION)
    p.set_defaults(run=cmd_inverse)

    p = sub.add_parser("limit", parents=[common], help="limit of NUM/DEN as x -> 0")
    p.add_argument("num")
    p.add_argument("den")
    p.add_argument("--order", type=_order, default=DEFAULT_PRECISION, help="starting precision")
    p.add_argument("--max-order", type=_order, default=MAX_PRECISION)
    p.set_defaults(run=cmd_limit)

    p = sub.add_parser("check-theorem2", parents=[common],
                       help="check ord/leading coefficient of f-g against inverses on random pairs")
    p.add_argument("--trials", type=_positive, default=100)
    p.add_argument("--order", type=_order, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--coeff-bound", type=_positive, default=9)
    p.set_defaults(run=cmd_check_theorem2)

    p = sub.add_parser("arnold", parents=[common], help="reproduce Arnold's limit")
    p.add_argument("--order", type=_order, default=8)
    p.set_defaults(run=cmd_arnold)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.run(args)
    except argparse.ArgumentTypeError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
