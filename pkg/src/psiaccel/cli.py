"""Command-line interface: ``psiaccel table | eval | compare``.

Exit codes: 0 converged, 1 not converged, 2 usage or domain error.
"""

import argparse
import sys
import warnings
from typing import List, Optional

from .digamma import DigammaConfig, digamma
from .exceptions import DomainError
from .tables import build_table, compare_methods, format_scalar, render_compare, render_table

EXIT_OK = 0
EXIT_NOT_CONVERGED = 1
EXIT_USAGE = 2

_METHOD_CHOICES = {"t": "t_transform", "epsilon": "epsilon", "raw": "raw_series"}


def _digits(text):
    value = int(text)
    if not 6 <= value <= 16:
        raise argparse.ArgumentTypeError(f"digits must be in 6..16, got {value}")
    return value


def _max_n(text):
    value = int(text)
    if not 0 <= value <= 40:
        raise argparse.ArgumentTypeError(f"max-n must be in 0..40, got {value}")
    return value


def _max_order(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"max-order must be at least 2, got {value}")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(
        prog="psiaccel",
        description="Digamma function via accelerated power series.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="reproduce a convergence table")
    table.add_argument("--id", type=int, choices=(1, 2), required=True, dest="table_id")
    table.add_argument("--digits", type=_digits, default=16)
    table.add_argument("--format", choices=("csv", "markdown"), default="markdown")

    def add_point(p):
        p.add_argument("--z-re", type=float, required=True)
        p.add_argument("--z-im", type=float, default=0.0)

    ev = sub.add_parser("eval", help="evaluate psi(1+z) at one point")
    add_point(ev)
    ev.add_argument("--method", choices=tuple(_METHOD_CHOICES), default="t")
    ev.add_argument("--digits", type=_digits, default=16)
    ev.add_argument("--max-order", type=_max_order, default=40)
    ev.add_argument("--tol", type=_positive_float, default=1e-15)

    cmp_ = sub.add_parser("compare", help="per-order errors of raw series, T and epsilon")
    add_point(cmp_)
    cmp_.add_argument("--max-n", type=_max_n, default=14)
    cmp_.add_argument("--format", choices=("csv", "markdown"), default="markdown")

    for p in (table, ev, cmp_):
        p.add_argument("--out", metavar="PATH", help="also write the output to PATH")
    return parser


def _point(args):
    if args.z_im == 0.0:
        return args.z_re
    return complex(args.z_re, args.z_im)


def run_table(args):
    table = build_table(args.table_id)
    return render_table(table, args.digits, args.format), EXIT_OK


def run_eval(args):
    config = DigammaConfig(max_order=args.max_order, tol=args.tol, method=_METHOD_CHOICES[args.method])
    result = digamma(_point(args), config)
    text = (
        f"{format_scalar(result.value, args.digits)}\n"
        f"order_used={result.order_used} converged={str(result.converged).lower()} "
        f"method={result.method} reduction_steps={result.reduction_steps}\n"
    )
    return text, EXIT_OK if result.converged else EXIT_NOT_CONVERGED


def run_compare(args):
    rows, ref = compare_methods(_point(args), args.max_n)
    if not ref.converged:
        warnings.warn("reference T value did not converge; errors are relative to its last order")
    code = EXIT_OK if ref.converged else EXIT_NOT_CONVERGED
    return render_compare(rows, args.format), code


_COMMANDS = {"table": run_table, "eval": run_eval, "compare": run_compare}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            text, code = _COMMANDS[args.command](args)
        except DomainError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
