# beta_sequence/sequence_handler.py – sequence runs and the s(n) audit tables
from __future__ import annotations

import logging
from typing import Any

import numpy as np
import pandas as pd

from beta_sequence.angles import angle_prescreen
from beta_sequence.quartic import (
    abs_identity_audit,
    gamma_minimal_polynomial_audit,
    parity_grading_holds,
    product_identity_audit,
    resultant_identity_audit,
    s_of_n,
    s_residue_audit,
)
from beta_sequence.sequence import (
    RamificationCertificate,
    SignSequence,
    build_n_sequence,
    extract_d_sequence,
    primes_union,
)
from compute_handler import ComputeManager
from cyclotomic.norms import divisor_norm_product

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


class SequenceHandler(ComputeManager):
    """Builds the sign sequence and its certificates; tabulates s(n) audits."""

    # ───────────────────────── sequence pipeline ─────────────────────────
    def run_sequence(
        self,
        generators: list[int] | None = None,
        count: int = 3,
        *,
        budget: int | None = None,
        precision_bits: int | None = None,
    ) -> tuple[SignSequence, list[RamificationCertificate]]:
        seq_cfg = self.settings["sequence"]
        gens = generators or seq_cfg["generators"]
        seq = build_n_sequence(
            gens,
            count,
            budget=budget or seq_cfg["budget"],
            precision_bits=precision_bits or seq_cfg["precision_bits"],
            max_precision_bits=seq_cfg["max_precision_bits"],
        )
        certs = extract_d_sequence(seq, **self.factor_options)
        return seq, certs

    @staticmethod
    def certificate_payload(seq: SignSequence, certs: list[RamificationCertificate]) -> dict[str, Any]:
        return {
            "sequence": seq.as_dict(),
            "certificates": [c.as_dict() for c in certs],
            "primes_union": primes_union(certs),
            "all_certified": all(c.certified for c in certs),
        }

    @staticmethod
    def certificate_table(certs: list[RamificationCertificate]) -> pd.DataFrame:
        rows = [
            {
                "index": c.index,
                "d": c.d,
                "norm": c.norm,
                "abs_mod4": abs(c.norm) % 4,
                "primes": list(c.primes),
                "complete": c.factorization.complete,
            }
            for c in certs
        ]
        return pd.DataFrame(rows)

    # ───────────────────────── audits ─────────────────────────
    def s_table(self, max_n: int) -> pd.DataFrame:
        rows = []
        for n in range(1, max_n + 1, 2):
            s = s_of_n(n)
            rows.append({"n": n, "s": s, "mod4": s % 4, "residue_ok": s_residue_audit(n)})
        return pd.DataFrame(rows)

    def identity_table(self, max_n: int) -> pd.DataFrame:
        rows = []
        for n in range(1, max_n + 1, 2):
            row = {
                "n": n,
                "s": s_of_n(n),
                "norm_product": divisor_norm_product(n),
                "abs_ok": abs_identity_audit(n),
                "signed_ok": product_identity_audit(n) if n >= 5 and n % 4 == 1 else None,
            }
            rows.append(row)
        return pd.DataFrame(rows)

    def resultant_identity_table(self, max_n: int) -> pd.DataFrame:
        rows = [{"n": n, "ok": resultant_identity_audit(n)} for n in range(1, max_n + 1, 2)]
        return pd.DataFrame(rows)

    @staticmethod
    def parity_ok(max_n: int) -> bool:
        return all(parity_grading_holds(n) for n in range(max_n + 1))

    @staticmethod
    def gamma_ok() -> bool:
        return gamma_minimal_polynomial_audit()

    def sign_scan(self, max_n: int) -> pd.DataFrame:
        """Float sign of sin(2π n·θ) next to the exact sign, for odd n ≤ max_n."""
        ns = np.arange(1, max_n + 1, 2)
        theta = np.arcsin(0.25) / (2 * np.pi)
        approx = np.sign(np.sin(2 * np.pi * ns * theta)).astype(int)
        prec = self.settings["sequence"]["precision_bits"]
        rows = []
        for n, a in zip(ns.tolist(), approx.tolist()):
            est = angle_prescreen(n, prec)
            exact = 1 if s_of_n(n) > 0 else -1
            rows.append({"n": n, "float_sign": a, "interval_sign": est.sign(), "exact_sign": exact})
        return pd.DataFrame(rows)
