# cyclotomic/norm_handler.py – tabular norm computations for the CLI pages
from __future__ import annotations

import logging

import pandas as pd

from compute_handler import ComputeManager
from cyclotomic.norms import (
    NormResult,
    norm_cd,
    norm_cd_via_resultant,
    norm_value,
    order_bound_audit,
    prime_recurrence,
)

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

NORM_COLUMNS = ["d", "norm", "abs_mod4", "factorization", "ramified_primes", "cofactor", "complete"]


class NormHandler(ComputeManager):
    """Norm tables over lists of odd d."""

    # ───────────────────────── norms ─────────────────────────
    def norm_results(self, ds: list[int], jobs: int = 1) -> list[NormResult]:
        logger.info("computing %d norms", len(ds))
        opts = self.factor_options
        return self.fan_out(lambda d: norm_cd(d, **opts), ds, jobs)

    def norm_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        rows = [r.as_row() for r in self.norm_results(ds, jobs)]
        return self.rows_to_df(rows, NORM_COLUMNS)

    def ramified_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        df = self.norm_table(ds, jobs)
        if df.empty:
            return df
        keep = df["ramified_primes"].map(bool)
        return df[keep].reset_index(drop=True)

    # ───────────────────────── cross checks ─────────────────────────
    def cross_check_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        """ψ-evaluation against the resultant route, one row per d."""

        def _row(d: int) -> dict:
            a = norm_value(d)
            b = norm_cd_via_resultant(d)
            return {"d": d, "psi_value": a, "resultant_value": b, "agree": a == b}

        return self.rows_to_df(self.fan_out(_row, ds, jobs))

    def residue_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        def _row(d: int) -> dict:
            v = norm_value(d)
            return {"d": d, "mod4": v % 4, "odd": v % 2 == 1, "ok": v % 4 == 1}

        return self.rows_to_df(self.fan_out(_row, ds, jobs))

    def order_audit_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        opts = self.factor_options

        def _row(d: int) -> dict:
            return {"d": d, "ok": order_bound_audit(d, **opts)}

        return self.rows_to_df(self.fan_out(_row, ds, jobs))

    def recurrence_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        """Each ramified prime p of N(c_d) must list d among its recurrence values."""
        rows = []
        for res in self.norm_results(ds, jobs):
            for p in res.ramified_primes:
                if res.d % p == 0:
                    continue
                d_values = prime_recurrence(p)
                rows.append({"d": res.d, "p": p, "d_values": d_values, "ok": res.d in d_values})
        return self.rows_to_df(rows, ["d", "p", "d_values", "ok"])
