# elliptic_divpoly/main_divpoly.py – `divpoly` and `torsion-check` commands
from __future__ import annotations

import argparse
import logging

from elliptic_divpoly.divpoly_handler import DivPolyHandler
from export_utils import publish

logger = logging.getLogger(__name__)


def cmd_divpoly(args: argparse.Namespace) -> int:
    dh = DivPolyHandler(args.settings)
    curve = dh.curve_from(dh.parse_int_list(args.curve))
    table = dh.table(args.max_n, curve)
    frame = dh.coefficient_frame(table, args.max_n)
    results: dict = {"curve": curve.as_dict(), "f": frame}
    if curve.is_default and args.max_n >= 2:
        results["factlist"] = dh.factlist_table(args.max_n)
        results["f2_divides"] = dh.divisibility_table(args.max_n)
    publish(
        "divpoly",
        {"max_n": args.max_n, "curve": list(curve.coeffs)},
        results,
        fmt=args.format,
        out=args.out,
        schema_version=dh.setting("output", "schema_version"),
        frame=frame,
    )
    return 0


def cmd_torsion_check(args: argparse.Namespace) -> int:
    dh = DivPolyHandler(args.settings)
    verdict = dh.torsion_verdict(args.coeffs)
    logger.info("torsion check for %s: %s", args.coeffs, verdict.kind.value)
    publish(
        "torsion-check",
        {"x_minpoly": args.coeffs},
        verdict,
        fmt="json",
        out=args.out,
        schema_version=dh.setting("output", "schema_version"),
    )
    return 0
