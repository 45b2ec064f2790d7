# beta_sequence/main_sequence.py – `sequence` command
from __future__ import annotations

import argparse
import logging

from beta_sequence.sequence_handler import SequenceHandler
from export_utils import publish

logger = logging.getLogger(__name__)


def cmd_sequence(args: argparse.Namespace) -> int:
    sh = SequenceHandler(args.settings)
    gens = sh.parse_int_list(args.gens) or None
    seq, certs = sh.run_sequence(
        gens,
        args.count,
        budget=args.budget,
        precision_bits=args.precision_bits,
    )
    payload = sh.certificate_payload(seq, certs)
    config = {
        **sh.effective_config(),
        "generators": list(seq.generators),
        "count": args.count,
    }
    publish(
        "sequence",
        config,
        payload,
        fmt=args.format,
        out=args.out,
        schema_version=sh.setting("output", "schema_version"),
        frame=sh.certificate_table(certs),
    )
    if not payload["all_certified"]:
        logger.error("at least one certificate is not certified")
        return 1
    return 0
