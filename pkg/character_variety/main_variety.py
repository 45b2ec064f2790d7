# character_variety/main_variety.py – `irreducible`, `rootplot` and `condition-star` commands
from __future__ import annotations

import argparse
import logging

from character_variety.variety_handler import VarietyHandler
from export_utils import publish

logger = logging.getLogger(__name__)


def cmd_irreducible(args: argparse.Namespace) -> int:
    vh = VarietyHandler(args.settings)
    if args.d or args.d_min is not None or args.d_max is not None:
        ds = vh.odd_values(args.d, args.d_min, args.d_max)
    else:
        ds = vh.default_odd_range()
    df = vh.irreducibility_table(ds, jobs=args.jobs)
    results = {"certificates": df, "even_remarks": vh.even_remarks()}
    publish(
        "irreducible",
        {**vh.effective_config(), "d": ds},
        results,
        fmt=args.format,
        out=args.out,
        schema_version=vh.setting("output", "schema_version"),
        frame=df,
    )
    failed = df.loc[df["verdict"] != "irreducible", "d"].tolist()
    if failed:
        logger.error("no irreducibility certificate for d in %s", failed)
        return 1
    return 0


def cmd_rootplot(args: argparse.Namespace) -> int:
    vh = VarietyHandler(args.settings)
    df = vh.rootplot(args.a_min, args.a_max, args.steps)
    config = {"a_min": args.a_min, "a_max": args.a_max, "steps": args.steps}
    publish(
        "rootplot",
        config,
        df,
        fmt=args.format,
        out=args.out,
        schema_version=vh.setting("output", "schema_version"),
        frame=df,
    )
    return 0


def cmd_condition_star(args: argparse.Namespace) -> int:
    vh = VarietyHandler(args.settings)
    report = vh.star_report(args.coeffs)
    publish(
        "condition-star",
        {"alexander": args.coeffs},
        report,
        fmt="json",
        out=args.out,
        schema_version=vh.setting("output", "schema_version"),
    )
    return 0
