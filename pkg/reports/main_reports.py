# reports/main_reports.py – `verify` command: run one suite or all of them
from __future__ import annotations

import argparse
import logging
import sys

from errors import VerificationFailure
from export_utils import publish
from reports.report_handler import VerifyHandler

logger = logging.getLogger(__name__)


def cmd_verify(args: argparse.Namespace) -> int:
    vh = VerifyHandler(args.settings)
    config = {"suite": args.suite, "max_n": args.max_n, "settings": vh.effective_config()}
    try:
        results = vh.run(args.suite, args.max_n, args.jobs)
    except VerificationFailure as exc:
        publish(
            "verify",
            config,
            {"passed": False, "clause": exc.clause, "index": exc.index, "detail": exc.detail},
            out=args.out,
            schema_version=vh.setting("output", "schema_version"),
        )
        print(f"verify {args.suite}: FAILED ({exc})", file=sys.stderr)
        return exc.exit_code

    publish(
        "verify",
        config,
        {"passed": True, "suites": results},
        out=args.out,
        schema_version=vh.setting("output", "schema_version"),
    )
    print(f"verify {args.suite}: passed ({', '.join(results)})", file=sys.stderr)
    return 0
