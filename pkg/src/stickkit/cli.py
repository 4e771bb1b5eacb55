"""Command line interface: ``stickkit triangle | coeff | verify``."""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import coefficients
from .identities import Family, verify_family
from .render import RenderSpec, render
from .report import report_to_text, reports_to_json

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FAMILY_CHOICES = [f.cli_name for f in Family] + ["all"]


def _highlight(text: str) -> tuple[int, int]:
    try:
        n, k = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,k got {text!r}") from None
    return n, k


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stickkit",
        description="Exact Pascal/trinomial coefficients and hockey-stick identity checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="render a Pascal or trinomial triangle")
    tri.add_argument("--kind", choices=["pascal", "trinomial"], default="pascal")
    tri.add_argument("--rows", type=int, required=True)
    tri.add_argument("--highlight", type=_highlight, metavar="N,K",
                     help="mark the stick [x] and puck (x) cells of case (n, k)")
    tri.add_argument("--format", choices=["text", "csv", "json"], default="text")

    coeff = sub.add_parser("coeff", help="print one exact coefficient")
    coeff.add_argument("kind", choices=["binomial", "trinomial", "multinomial"])
    coeff.add_argument("args", type=int, nargs="+", metavar="INT")

    ver = sub.add_parser("verify", help="sweep an identity family over a parameter grid")
    ver.add_argument("--family", choices=FAMILY_CHOICES, required=True)
    ver.add_argument("--n-max", type=_non_negative, required=True)
    ver.add_argument("--k-max", type=_non_negative, required=True)
    ver.add_argument("--format", choices=["text", "json"], default="text")
    ver.add_argument("--fail-fast", action="store_true")
    return parser


def _cmd_triangle(args, parser) -> int:
    try:
        spec = RenderSpec(args.kind, args.rows, args.highlight, args.format)
    except ValueError as exc:
        parser.error(str(exc))
    sys.stdout.write(render(spec))
    return EXIT_OK


def _cmd_coeff(args, parser) -> int:
    values = args.args
    if args.kind == "multinomial":
        value = coefficients.multinomial(values[0], values[1:])
    else:
        if len(values) != 2:
            parser.error(f"{args.kind} takes exactly two integers: n k")
        fn = coefficients.binomial if args.kind == "binomial" else coefficients.trinomial
        value = fn(*values)
    sys.stdout.write(f"{value}\n")
    return EXIT_OK


def _cmd_verify(args, parser) -> int:
    families = list(Family) if args.family == "all" else [Family.parse(args.family)]
    reports = []
    for family in families:
        report = verify_family(family, args.n_max, args.k_max, fail_fast=args.fail_fast)
        reports.append(report)
        if args.fail_fast and not report.ok:
            break
    if args.format == "json":
        sys.stdout.write(reports_to_json(reports, as_array=args.family == "all"))
    else:
        sys.stdout.write("".join(report_to_text(r) for r in reports))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"triangle": _cmd_triangle, "coeff": _cmd_coeff, "verify": _cmd_verify}[args.command]
    return handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
