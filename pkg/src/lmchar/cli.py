"""Command-line front end.

    lmchar table --n 3 [--forget-s2] [--format text|json|latex]
    lmchar verify --max-n 10 [--suite NAME ...|all] [--format text|json]
    lmchar euler --max-n 8 [--format text|json]

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from math import factorial

from . import losev_manin as lm
from .render import latex, text_lines
from .symfunc import bi_to_schur, dimension, format_powersum, to_json, to_schur
from .verify import SUITES, verify

DEFAULT_GUARD = 12
GUARD_ENV = "LMCHAR_MAX_N"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def _suite_name(text: str) -> str:
    if text != "all" and text not in SUITES:
        raise argparse.ArgumentTypeError(f"unknown suite {text!r}; valid suites: all, {', '.join(SUITES)}")
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lmchar",
        description="S_2 x S_n-equivariant Poincare-Serre polynomials of the Losev-Manin spaces.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--no-guard",
        action="store_true",
        help=f"allow n above the size guard (default {DEFAULT_GUARD}, env {GUARD_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", parents=[common], help="print E_{S_2 x S_n}(q) in the Schur basis")
    table.add_argument("--n", type=_positive_int, required=True)
    table.add_argument("--forget-s2", action="store_true", help="restrict to S_n")
    table.add_argument("--format", choices=("text", "json", "latex"), default="text")

    ver = sub.add_parser("verify", parents=[common], help="run cross-formula verification suites")
    ver.add_argument("--max-n", type=_positive_int, required=True)
    ver.add_argument("--suite", type=_suite_name, action="append", help="suite name or 'all' (repeatable)")
    ver.add_argument("--format", choices=("text", "json"), default="text")

    eu = sub.add_parser("euler", parents=[common], help="print equivariant Euler characteristics e_{S_n}")
    eu.add_argument("--max-n", type=_positive_int, required=True)
    eu.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _guard() -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None:
        return DEFAULT_GUARD
    try:
        return int(raw)
    except ValueError:
        return DEFAULT_GUARD


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_table(args) -> int:
    n = args.n
    e = lm.equivariant_poincare(n)
    if args.forget_s2:
        value = lm.forget_s2(e, n)
        coeffs = to_schur(value)
    else:
        value = e
        coeffs = bi_to_schur(e)
    if args.format == "json":
        _emit(json.dumps(to_json(value, "schur")))
    elif args.format == "latex":
        _emit(latex(coeffs))
    else:
        _emit("\n".join(text_lines(coeffs)))
    return 0


def cmd_verify(args) -> int:
    report = verify(args.max_n, args.suite or ["all"])
    if args.format == "json":
        _emit(json.dumps(report.to_json()))
    else:
        lines = [
            f"{'PASS' if c.passed else 'FAIL'}  {c.name:<26} n={c.n}" + ("" if c.passed else f"  {c.detail}")
            for c in report.checks
        ]
        failed = len(report.failures)
        lines.append(
            f"{'OK' if report.passed else 'FAILED'}: {len(report.checks) - failed}/{len(report.checks)} checks passed"
        )
        _emit("\n".join(lines))
    return 0 if report.passed else 1


def cmd_euler(args) -> int:
    series = lm.euler_characteristic_series(args.max_n)
    rows = []
    for n in range(1, args.max_n + 1):
        dim = dimension(series[n], n).coeff(0)
        rows.append((n, dim, series[n]))
    if args.format == "json":
        payload = {
            "max_n": args.max_n,
            "series": [
                {"n": n, "dimension": int(dim), "value": to_json(value, "powersum")} for n, dim, value in rows
            ],
        }
        _emit(json.dumps(payload))
    else:
        lines = ["n\tdim\te_n"]
        lines += [f"{n}\t{dim}\t{format_powersum(value)}" for n, dim, value in rows]
        _emit("\n".join(lines))
    bad = [n for n, dim, _ in rows if dim != factorial(n)]
    if bad:
        print(f"warning: dimension differs from n! at n = {bad}", file=sys.stderr)
    return 0


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "euler": cmd_euler}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    size = args.n if args.command == "table" else args.max_n
    limit = _guard()
    if size > limit and not args.no_guard:
        print(
            f"lmchar: error: n={size} exceeds the size guard {limit}; "
            f"pass --no-guard or set {GUARD_ENV} to raise it",
            file=sys.stderr,
        )
        return 2
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
