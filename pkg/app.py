"""
app.py – command router for the surgery arithmetic toolkit

    python app.py norms --d 3
    python app.py sequence --gens 5,13 --count 3 --out certs.json
    python app.py verify all
"""
from __future__ import annotations

import argparse
import logging
import sys

# ── Page modules ─────────────────────────────────────────────
from beta_sequence.main_sequence import cmd_sequence
from character_variety.main_variety import cmd_condition_star, cmd_irreducible, cmd_rootplot
from cyclotomic.main_norms import cmd_norms, cmd_ramified
from elliptic_divpoly.main_divpoly import cmd_divpoly, cmd_torsion_check
from errors import ToolkitError
from reports.main_reports import cmd_verify
from reports.report_handler import SUITES

logger = logging.getLogger("surgery")
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    """Flags accepted before or after the subcommand; subparsers never overwrite the top-level value."""
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--verbose", action="store_true", default=default(False), help="debug logging")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="warnings only")
    parser.add_argument("--settings", default=default(None), help="TOML settings file")
    parser.add_argument("--jobs", type=int, default=default(1), help="worker threads for independent d values")


def _d_range(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--d", help="comma-separated odd d values")
    parser.add_argument("--d-min", type=int)
    parser.add_argument("--d-max", type=int)


def _output(parser: argparse.ArgumentParser, formats: bool = True) -> None:
    if formats:
        parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="surgery", description="Exact arithmetic for the 7_4 surgery family.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    # routing -------------------------------------------------
    p = sub.add_parser("norms", parents=[common], help="N(c_d) with factorization")
    _d_range(p)
    _output(p)
    p.set_defaults(func=cmd_norms)

    p = sub.add_parser("ramified", parents=[common], help="d with a prime ≡ 3 (mod 4) of odd exponent")
    _d_range(p)
    _output(p)
    p.set_defaults(func=cmd_ramified)

    p = sub.add_parser("sequence", parents=[common], help="sign sequence and ramification certificates")
    p.add_argument("--gens", help="semigroup generators, primes ≡ 1 (mod 4)")
    p.add_argument("--count", type=int, default=3)
    p.add_argument("--budget", type=int)
    p.add_argument("--precision-bits", type=int)
    _output(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("divpoly", parents=[common], help="division polynomials f_1..f_N")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--curve", help="a1,a2,a3,a4,a6 (default 0,2,0,0,-1)")
    _output(p)
    p.set_defaults(func=cmd_divpoly)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--max-n", type=int, help="upper bound for the suite (n, d or count)")
    _output(p, formats=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("irreducible", parents=[common], help="irreducibility certificates for the surgery cubics")
    _d_range(p)
    _output(p)
    p.set_defaults(func=cmd_irreducible)

    p = sub.add_parser("rootplot", parents=[common], help="largest real root of R³ − aR² − 1")
    p.add_argument("--a-min", type=float, default=-2.0)
    p.add_argument("--a-max", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=401)
    _output(p)
    p.set_defaults(func=cmd_rootplot)

    p = sub.add_parser("torsion-check", parents=[common], help="torsion verdict for a minimal polynomial of x")
    p.add_argument("coeffs", help="ascending coefficients, e.g. 1,1 (put -- before a list starting with a minus sign)")
    _output(p, formats=False)
    p.set_defaults(func=cmd_torsion_check)

    p = sub.add_parser("condition-star", parents=[common], help="condition (⋆) for an Alexander polynomial")
    p.add_argument("coeffs", help="ascending coefficients, e.g. 4,-7,4 (put -- before a list starting with a minus sign)")
    _output(p, formats=False)
    p.set_defaults(func=cmd_condition_star)
    return parser


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.getLogger().setLevel(level)
    for name in list(logging.root.manager.loggerDict):
        logging.getLogger(name).setLevel(level)
    logger.setLevel(level)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    _configure_logging(args)

    try:
        return args.func(args)
    except ToolkitError as exc:
        logger.error("%s: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
