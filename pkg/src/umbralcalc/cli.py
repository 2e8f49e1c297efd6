"""Command-line front end: tables, operator applications, identity checks.

Series arguments use the expression grammar from :mod:`umbralcalc.dsl`;
polynomial arguments are comma-separated rationals, low degree first.
Rationals are always emitted as exact ``p/q`` strings, never floats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import registry
from .dsl import EvalError, ExprSyntaxError, evaluate
from .errors import (
    IndexOutOfRange,
    NotDeltaSeries,
    OrderTooSmall,
    UnknownIdentityTag,
)
from .series import TruncatedSeries
from .umbral import attached_polynomial, pairing, umbral_operator
from .univar import UnivarPoly
from .virasoro import FTable, mode_shift

GRAMMAR = """\
series expression grammar:
  expr     := term (("+" | "-") term)*
  term     := factor (("*" | "/") factor)*
  factor   := "-" factor | atom ("^" nat)?
  atom     := rational | "t" | "(" expr ")" | func "(" expr ")"
  func     := "exp" | "log" | "inv" | "rev"
  rational := int ("/" posint)?
polynomial arguments: comma-separated rationals, low degree first (e.g. 0,1,3/2)
"""


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n{GRAMMAR}")
        raise SystemExit(2)


class _UsageError(Exception):
    pass


def _parse_poly(text: str) -> UnivarPoly:
    try:
        return UnivarPoly([Fraction(part.strip()) for part in text.split(",")])
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad polynomial {text!r}: {exc}") from exc


def _series_arg(expr: str, order: int) -> TruncatedSeries:
    try:
        return evaluate(expr, order)
    except (ExprSyntaxError, EvalError) as exc:
        raise _UsageError(f"bad series expression {expr!r}: {exc}") from exc


def _values_report(values: Sequence[Fraction], label: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({label: [str(v) for v in values]}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", label])
        for n, v in enumerate(values):
            writer.writerow([n, str(v)])
        return buf.getvalue()
    return " ".join(str(v) for v in values) + "\n"


def _scalar_report(value: Fraction, label: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({label: str(value)}) + "\n"
    if fmt == "csv":
        return f"{label}\n{value}\n"
    return f"{value}\n"


def _verify_report(results, order: int, seed: int, fmt: str) -> str:
    if fmt == "json":
        payload = {
            "order": order,
            "seed": seed,
            "passed": all(r.passed for r in results),
            "results": [
                {"tag": r.tag, "passed": r.passed, "detail": r.detail}
                for r in results
            ],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["tag", "passed", "detail"])
        for r in results:
            writer.writerow([r.tag, "pass" if r.passed else "FAIL", r.detail])
        return buf.getvalue()
    lines = [
        f"{'PASS' if r.passed else 'FAIL'} {r.tag}: {r.detail}" for r in results
    ]
    good = sum(1 for r in results if r.passed)
    lines.append(f"passed {good}/{len(results)} (order={order}, seed={seed})")
    return "\n".join(lines) + "\n"


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="umbralcalc",
        description="Exact identity checks and tables for the umbral/Virasoro calculus.",
        epilog=GRAMMAR,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_default=None):
        p.add_argument("--order", type=int, default=order_default)
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--output", default=None)

    p_bell = sub.add_parser("bell", help="EGF coefficients of exp(exp(t)-1)")
    common(p_bell, order_default=10)

    p_seq = sub.add_parser("umbral-seq", help="attached polynomial B_n(x)")
    p_seq.add_argument("--B", required=True, dest="b_expr")
    p_seq.add_argument("--n", required=True, type=int)
    common(p_seq)

    p_theta = sub.add_parser("theta", help="apply the umbral operator to p")
    p_theta.add_argument("--B", required=True, dest="b_expr")
    p_theta.add_argument("--p", required=True, dest="poly")
    common(p_theta)

    p_shift = sub.add_parser("shift", help="apply the level-m attached shift to p")
    p_shift.add_argument("--B", required=True, dest="b_expr")
    p_shift.add_argument("--m", type=int, default=-1)
    p_shift.add_argument("--p", required=True, dest="poly")
    common(p_shift)

    p_table = sub.add_parser("fmn-table", help="table of ladder values f_m(n)")
    p_table.add_argument("--max-m", type=int, default=8)
    p_table.add_argument("--max-n", type=int, default=20)
    common(p_table)

    p_pair = sub.add_parser("pair", help="pair a functional A against p")
    p_pair.add_argument("--A", required=True, dest="a_expr")
    p_pair.add_argument("--p", required=True, dest="poly")
    common(p_pair)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--id", default="ALL", dest="tag")
    p_verify.add_argument("--seed", type=int, default=0)
    common(p_verify, order_default=10)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    opts = parser.parse_args(argv)
    try:
        if opts.order is not None and opts.order < 0:
            raise _UsageError("--order must be nonnegative")
        if opts.command == "bell":
            values = registry.bell_egf(opts.order)
            _emit(_values_report(values, "bell", opts.format), opts.output)
            return 0

        if opts.command == "umbral-seq":
            if opts.n < 0:
                raise _UsageError("--n must be nonnegative")
            order = max(opts.n, 1, opts.order or 0)
            b = _series_arg(opts.b_expr, order)
            poly = attached_polynomial(b, opts.n)
            values = [poly.coeff(k) for k in range(opts.n + 1)]
            _emit(_values_report(values, "coeff", opts.format), opts.output)
            return 0

        if opts.command == "theta":
            p = _parse_poly(opts.poly)
            order = max(p.degree, 1, opts.order or 0)
            b = _series_arg(opts.b_expr, order)
            image = umbral_operator(b, p)
            values = [image.coeff(k) for k in range(max(image.degree, 0) + 1)]
            _emit(_values_report(values, "coeff", opts.format), opts.output)
            return 0

        if opts.command == "shift":
            p = _parse_poly(opts.poly)
            needed = max(p.degree, p.degree - opts.m, 1)
            order = max(needed, opts.order or 0)
            b = _series_arg(opts.b_expr, order)
            image = mode_shift(b, opts.m, p)
            values = [image.coeff(k) for k in range(max(image.degree, 0) + 1)]
            _emit(_values_report(values, "coeff", opts.format), opts.output)
            return 0

        if opts.command == "fmn-table":
            table = FTable(opts.max_m, opts.max_n)
            if opts.format == "json":
                _emit(table.to_json(), opts.output)
            elif opts.format == "csv":
                _emit(table.to_csv(), opts.output)
            else:
                lines = []
                for m, row in table.rows():
                    lines.append(
                        f"m={m:>2}: " + " ".join(str(v) for v in row)
                    )
                _emit("\n".join(lines) + "\n", opts.output)
            return 0

        if opts.command == "pair":
            p = _parse_poly(opts.poly)
            order = max(p.degree, 0, opts.order or 0)
            a = _series_arg(opts.a_expr, order)
            value = pairing(a, p)
            _emit(_scalar_report(value, "pairing", opts.format), opts.output)
            return 0

        if opts.command == "verify":
            if opts.tag == "ALL":
                results = registry.run_all(order=opts.order, seed=opts.seed)
            else:
                results = [
                    registry.run_check(opts.tag, order=opts.order, seed=opts.seed)
                ]
            _emit(
                _verify_report(results, opts.order, opts.seed, opts.format),
                opts.output,
            )
            return 0 if all(r.passed for r in results) else 1

        raise _UsageError(f"unknown command {opts.command!r}")
    except UnknownIdentityTag as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (NotDeltaSeries, OrderTooSmall, IndexOutOfRange) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n{GRAMMAR}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
