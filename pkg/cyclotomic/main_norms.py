# cyclotomic/main_norms.py – `norms` and `ramified` commands
from __future__ import annotations

import argparse

from cyclotomic.norm_handler import NormHandler
from export_utils import publish


def _handler(args: argparse.Namespace) -> NormHandler:
    return NormHandler(args.settings)


def cmd_norms(args: argparse.Namespace) -> int:
    nh = _handler(args)
    ds = nh.odd_values(args.d, args.d_min, args.d_max)
    df = nh.norm_table(ds, jobs=args.jobs)
    publish(
        "norms",
        {**nh.effective_config(), "d": ds},
        df,
        fmt=args.format,
        out=args.out,
        schema_version=nh.setting("output", "schema_version"),
        frame=df,
    )
    return 0


def cmd_ramified(args: argparse.Namespace) -> int:
    nh = _handler(args)
    ds = nh.odd_values(args.d, args.d_min, args.d_max)
    df = nh.ramified_table(ds, jobs=args.jobs)
    publish(
        "ramified",
        {**nh.effective_config(), "d": ds},
        df,
        fmt=args.format,
        out=args.out,
        schema_version=nh.setting("output", "schema_version"),
        frame=df,
    )
    return 0
