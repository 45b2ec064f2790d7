# elliptic_divpoly/divpoly_handler.py – division-polynomial tables, structure checks, torsion verdicts
from __future__ import annotations

import logging
from typing import Any

import pandas as pd

from compute_handler import ComputeManager
from core_arith.intpoly import IntPoly
from elliptic_divpoly.checks import divisibility_check, factlist_check, two_adic_root_valuations
from elliptic_divpoly.divpoly import DivPolyTable, divpoly_table
from elliptic_divpoly.torsion import TorsionVerdict, intersection_point_audit, torsion_obstruction
from elliptic_divpoly.weierstrass import WeierstrassCurve, curve_invariants, default_curve
from errors import UnsupportedSizeError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


class DivPolyHandler(ComputeManager):
    """Builds f_1..f_N once per curve and serves every check from that table."""

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self._tables: dict[tuple[int, ...], DivPolyTable] = {}

    # ───────────────────────── tables ─────────────────────────
    def table(self, max_n: int, curve: WeierstrassCurve | None = None) -> DivPolyTable:
        curve = curve or default_curve()
        limit = self.setting("limits", "divpoly_max_n")
        if max_n > limit:
            raise UnsupportedSizeError(f"max n {max_n} above limits.divpoly_max_n = {limit}")
        cached = self._tables.get(curve.coeffs)
        if cached is None or cached.N < max_n:
            logger.info("building f_1..f_%d for %s", max_n, curve.coeffs)
            cached = divpoly_table(curve, max_n)
            self._tables[curve.coeffs] = cached
        return cached

    @staticmethod
    def curve_from(coeffs: list[int] | None) -> WeierstrassCurve:
        return curve_invariants(*coeffs) if coeffs else default_curve()

    @staticmethod
    def coefficient_frame(table: DivPolyTable, max_n: int | None = None) -> pd.DataFrame:
        """divpoly_csv: one row per n with degree and ascending coefficients."""
        top = max_n or table.N
        rows = [
            {"n": n, "degree": table[n].degree, "coefficients": table[n].to_list()}
            for n in range(1, top + 1)
        ]
        return pd.DataFrame(rows)

    # ───────────────────────── structure checks ─────────────────────────
    def factlist_table(self, max_n: int) -> pd.DataFrame:
        table = self.table(max_n)
        return pd.DataFrame([factlist_check(table, n) for n in range(2, max_n + 1)])

    def divisibility_table(self, max_n: int) -> pd.DataFrame:
        table = self.table(max_n)
        evens = list(range(2, max_n + 1, 2))
        return pd.DataFrame({"n": evens, "f2_divides": [divisibility_check(table, n) for n in evens]})

    def valuation_table(self, max_n: int) -> pd.DataFrame:
        table = self.table(max_n)
        rows = []
        for n in range(2, max_n + 1):
            segments = two_adic_root_valuations(table, n)
            slopes = [s for s, _ in segments if s is not None]
            rows.append({
                "n": n,
                "segments": [(str(s), k) for s, k in segments],
                "min_valuation": str(min(slopes)) if slopes else None,
                "all_positive": all(s > 0 for s in slopes),
            })
        return pd.DataFrame(rows)

    # ───────────────────────── torsion ─────────────────────────
    @staticmethod
    def torsion_verdict(coeffs: str) -> TorsionVerdict:
        return torsion_obstruction(IntPoly.from_string(coeffs))

    def intersection_audit(self, max_n: int = 6) -> dict[str, Any]:
        return intersection_point_audit(max_n, self.table(max(max_n, 4)))
