"""Command-line front end.

Exit codes: 0 success, 1 a checked identity failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction

from . import __version__
from .boole import (boole_classic, expected_vanishing, fuzz_verify, vanishing_sum,
                    verify_proposition)
from .errors import BooleError
from .exact_core import NodeGrid, factorial, format_polynomial, format_rational, parse_rational
from .finite_difference import difference_table, nth_delta
from .interpolation import PointSet, lagrange_interpolate, leading_coeff_from_samples
from .numerics import STRATEGIES, Strategy, error_sweep
from .parsing import parse_polynomial

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

CSV_HEADER = ["n", "strategy", "computed", "exact", "relative_error", "term_magnitude_ratio"]


class _UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Accepts ``-p/q`` as a negative rational value rather than an option."""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$")


def _rational_arg(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text):
    parts = [t for t in text.split(",") if t.strip()]
    if not parts:
        raise argparse.ArgumentTypeError("expected a comma-separated list of rationals")
    return [_rational_arg(t) for t in parts]


def _uint64(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def format_float(x: float):
    """Shortest round-trip text for finite floats; ``inf``/``-inf``/``nan`` otherwise."""
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return repr(x)


def _json_float(x: float):
    return x if math.isfinite(x) else format_float(x)


def _poly_json(p):
    return {"coefficients": [format_rational(c) for c in p.coeffs],
            "polynomial": format_polynomial(p)}


# -- subcommands -------------------------------------------------------------
# Each returns (exit_code, text_output, json_payload).

def cmd_boole_sum(args):
    p = parse_polynomial(args.poly)
    grid = NodeGrid(args.a, args.b, args.n)
    rep = verify_proposition(p, grid)
    payload = {
        "computed": format_rational(rep.computed),
        "predicted": format_rational(rep.predicted),
        "residual": format_rational(rep.residual),
        "holds": rep.holds,
        "mode": rep.mode,
        "n": grid.n,
        "a": format_rational(grid.a),
        "b": format_rational(grid.b),
    }
    text = (f"computed: {payload['computed']}\n"
            f"predicted: {payload['predicted']}\n"
            f"residual: {payload['residual']}\n"
            f"holds: {'true' if rep.holds else 'false'}\n")
    return (EXIT_OK if rep.holds else EXIT_VIOLATION), text, payload


def cmd_classic(args):
    if args.n < 1:
        raise _UsageError("--n must be >= 1")
    value = boole_classic(args.n)
    holds = value == factorial(args.n)
    payload = {"n": args.n, "value": str(value), "factorial": str(factorial(args.n)),
               "holds": holds}
    return (EXIT_OK if holds else EXIT_VIOLATION), f"{value}\n", payload


def cmd_vanishing(args):
    include_zero = not args.from_one
    value = vanishing_sum(args.n, args.m, include_zero=include_zero)
    expected = expected_vanishing(args.n, args.m)
    holds = value == expected
    payload = {"n": args.n, "m": args.m,
               "convention": "k>=1" if args.from_one else "k>=0",
               "value": str(value), "expected": str(expected), "holds": holds}
    text = f"{value}\n"
    if not holds:
        text += f"# expected {expected}; the k>=1 sum does not vanish at m=0\n"
    return (EXIT_OK if holds else EXIT_VIOLATION), text, payload


def cmd_diff(args):
    p = parse_polynomial(args.poly)
    q = nth_delta(p, args.n, args.h)
    return EXIT_OK, format_polynomial(q) + "\n", _poly_json(q)


def cmd_diff_table(args):
    depth = len(args.values) - 1 if args.depth is None else args.depth
    table = difference_table(args.values, depth)
    rows = [[format_rational(v) for v in row] for row in table.rows]
    text = "".join(" ".join(r) + "\n" for r in rows)
    return EXIT_OK, text, {"rows": rows}


def cmd_interp(args):
    if not args.point:
        raise _UsageError("at least one --point X Y is required")
    pts = PointSet((_rational_arg(x), _rational_arg(y)) for x, y in args.point)
    q = lagrange_interpolate(pts)
    return EXIT_OK, format_polynomial(q) + "\n", _poly_json(q)


def cmd_lead_coeff(args):
    grid = NodeGrid(args.a, args.b, len(args.values) - 1)
    c = leading_coeff_from_samples(args.values, grid)
    payload = {"leading_coefficient": format_rational(c), "n": grid.n}
    return EXIT_OK, format_rational(c) + "\n", payload


def cmd_verify(args):
    rep = fuzz_verify(args.max_degree, args.trials, args.seed, args.coeff_bound,
                      workers=args.workers)
    witnesses = [dict(_poly_json(p), a=format_rational(g.a), b=format_rational(g.b), n=g.n)
                 for p, g in rep.witnesses]
    payload = {"trials": rep.trials, "failures": rep.failures, "seed": rep.seed,
               "max_degree": rep.max_degree, "coeff_bound": rep.coeff_bound,
               "witnesses": witnesses}
    text = f"trials: {rep.trials}\nfailures: {rep.failures}\nseed: {rep.seed}\n"
    for w in witnesses:
        text += f"witness: p = {w['polynomial']}, a = {w['a']}, b = {w['b']}, n = {w['n']}\n"
    return (EXIT_OK if rep.failures == 0 else EXIT_VIOLATION), text, payload


def _record_row(r):
    return [str(r.n), r.strategy.value, format_float(r.computed), format_rational(r.exact),
            format_float(r.relative_error), format_float(r.term_magnitude_ratio)]


def cmd_float_sweep(args):
    strategies = args.strategy or list(STRATEGIES)
    records = error_sweep(args.n_min, args.n_max, strategies)
    payload = {"records": [{
        "n": r.n,
        "strategy": r.strategy.value,
        "computed": _json_float(r.computed),
        "exact": format_rational(r.exact),
        "relative_error": _json_float(r.relative_error),
        "term_magnitude_ratio": _json_float(r.term_magnitude_ratio),
        "absolute": r.absolute,
        "overflow": r.overflow,
    } for r in records]}
    buf = io.StringIO()
    # text mode is the same table, tab-separated
    writer = csv.writer(buf, delimiter="," if args.csv else "\t", lineterminator="\n")
    writer.writerow(CSV_HEADER)
    writer.writerows(_record_row(r) for r in records)
    return EXIT_OK, buf.getvalue(), payload


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    parser = _ArgumentParser(
        prog="boolesum",
        description="Exact finite differences, Lagrange interpolation and "
                    "alternating binomial sums. Rationals are written p/q; "
                    "polynomials like '2x^2 - 1/3x + 5'.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_, description=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("boole-sum", cmd_boole_sum,
             "alternating sum over the grid a + k*b and its closed form")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--a", type=_rational_arg, default=Fraction(0))
    sp.add_argument("--b", type=_rational_arg, default=Fraction(1))
    sp.add_argument("--n", type=_nonneg_int, required=True)

    sp = add("classic", cmd_classic, "sum_{k=1}^{n} (-1)^(n-k) C(n,k) k^n, which equals n!")
    sp.add_argument("--n", type=_nonneg_int, required=True)

    sp = add("vanishing", cmd_vanishing, "sum (-1)^(n-k) C(n,k) k^m for 0 <= m <= n")
    sp.add_argument("--n", type=_nonneg_int, required=True)
    sp.add_argument("--m", type=_nonneg_int, required=True)
    sp.add_argument("--from-one", action="store_true",
                    help="sum over k = 1..n instead of k = 0..n")

    sp = add("diff", cmd_diff, "n-th forward difference of a polynomial with step h")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--n", type=_nonneg_int, default=1)
    sp.add_argument("--h", type=_rational_arg, default=Fraction(1))

    sp = add("diff-table", cmd_diff_table, "forward difference table of a sequence")
    sp.add_argument("--values", type=_rational_list, required=True,
                    help="comma-separated rationals, e.g. 0,1,8,27")
    sp.add_argument("--depth", type=_nonneg_int, default=None,
                    help="number of difference rows (default: maximal)")

    sp = add("interp", cmd_interp, "Lagrange interpolating polynomial through points")
    sp.add_argument("--point", nargs=2, action="append", metavar=("X", "Y"))

    sp = add("lead-coeff", cmd_lead_coeff,
             "coefficient of x^n of the interpolant through samples on a + k*b")
    sp.add_argument("--values", type=_rational_list, required=True)
    sp.add_argument("--a", type=_rational_arg, default=Fraction(0))
    sp.add_argument("--b", type=_rational_arg, default=Fraction(1))

    sp = add("verify", cmd_verify, "check the identity on seeded random instances")
    sp.add_argument("--max-degree", type=_nonneg_int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=_uint64, default=0)
    sp.add_argument("--coeff-bound", type=int, default=100)
    sp.add_argument("--workers", type=int, default=None)

    sp = add("float-sweep", cmd_float_sweep,
             "binary64 error of the sum for p = x^n on 0..n under each strategy")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--strategy", action="append", choices=[s.value for s in Strategy])
    sp.add_argument("--csv", action="store_true", help="emit CSV")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    old_out, old_err = sys.stdout, sys.stderr
    sys.stdout, sys.stderr = stdout, stderr  # argparse writes usage/help here
    try:
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    finally:
        sys.stdout, sys.stderr = old_out, old_err

    try:
        code, text, payload = args.func(args)
    except (_UsageError, BooleError, ValueError, ZeroDivisionError, IndexError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=stderr)
        return EXIT_USAGE

    if args.json:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())
