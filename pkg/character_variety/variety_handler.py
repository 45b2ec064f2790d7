# character_variety/variety_handler.py – surgery cubics, house bounds and symbol checks as tables
from __future__ import annotations

import logging

import pandas as pd

from character_variety.curve import point_to_representation, sample_curve_points, verify_representation
from character_variety.house import (
    CUBIC_BOUND,
    cms_exclusion,
    conjugate_maximum,
    discriminant_jump,
    house_bound_check,
    rootplot_frame,
)
from character_variety.surgery import (
    IrreducibilityReport,
    constant_term_matches_norm,
    irreducibility_certificate,
    printed_factorization_remark,
)
from character_variety.symbols import (
    ConditionStarReport,
    condition_star,
    local_split_criterion,
    minus_one_square_in_field,
)
from compute_handler import ComputeManager
from core_arith.intpoly import IntPoly
from core_arith.integers import small_primes

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


class VarietyHandler(ComputeManager):
    """Everything on the canonical component that reports as a table."""

    # ───────────────────────── irreducibility ─────────────────────────
    def irreducibility_reports(self, ds: list[int], jobs: int = 1) -> list[IrreducibilityReport]:
        primes = self.setting("limits", "irreducibility_primes")
        max_degree = self.setting("limits", "zfactor_max_degree")
        logger.info("irreducibility certificates for %d values of d", len(ds))
        return self.fan_out(
            lambda d: irreducibility_certificate(d, primes, max_degree=max_degree), ds, jobs
        )

    def irreducibility_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        rows = []
        for rep in self.irreducibility_reports(ds, jobs):
            rows.append({
                "d": rep.d,
                "method": rep.method,
                "verdict": rep.verdict,
                "prime": rep.witness.get("prime"),
            })
        return self.rows_to_df(rows, ["d", "method", "verdict", "prime"])

    @staticmethod
    def even_remarks() -> list[dict]:
        return [printed_factorization_remark(d) for d in (4, 8)]

    def constant_norm_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        ok = self.fan_out(constant_term_matches_norm, ds, jobs)
        return pd.DataFrame({"d": ds, "ok": ok})

    # ───────────────────────── house bounds ─────────────────────────
    def house_table(self, ds: list[int], jobs: int = 1) -> pd.DataFrame:
        def _row(d: int) -> dict:
            k, a, root = conjugate_maximum(d)
            return {
                "d": d,
                "k": k,
                "a": a,
                "root": root,
                "house_bound": house_bound_check(d),
                "cms_exclusion": cms_exclusion(d),
            }
        return self.rows_to_df(self.fan_out(_row, ds, jobs))

    @staticmethod
    def rootplot(a_min: float, a_max: float, steps: int) -> pd.DataFrame:
        df = rootplot_frame(a_min, a_max, steps)
        logger.info("rootplot: %d samples, discriminant jump at a = %.5f", len(df), discriminant_jump())
        return df

    @staticmethod
    def root_window_ok(steps: int = 400) -> bool:
        return bool((rootplot_frame(-2.0, 2.0, steps)["root"] < CUBIC_BOUND).all())

    # ───────────────────────── representations / symbols ─────────────────────────
    @staticmethod
    def representation_table(count: int = 100, seed: int = 0) -> pd.DataFrame:
        rows = []
        for R, Z in sample_curve_points(count, seed):
            x, r = point_to_representation(R, Z)
            rows.append({"R": R, "Z": Z, "residual": verify_representation(x, r)})
        return pd.DataFrame(rows)

    @staticmethod
    def local_criterion_table(p_max: int = 100, f_max: int = 4) -> pd.DataFrame:
        rows = []
        for p in small_primes(p_max):
            if p == 2:
                continue
            for f in range(1, f_max + 1):
                rule = local_split_criterion(p, f)
                explicit = "split" if minus_one_square_in_field(p, f) else "ramified"
                rows.append({"p": p, "f": f, "rule": rule, "explicit": explicit})
        return pd.DataFrame(rows)

    def star_report(self, coeffs: str) -> ConditionStarReport:
        alexander = IntPoly.from_string(coeffs)
        return condition_star(alexander, max_degree=self.setting("limits", "zfactor_max_degree"))

    @staticmethod
    def default_odd_range(d_max: int = 41) -> list[int]:
        return [d for d in range(3, d_max + 1, 2)]

    @staticmethod
    def house_range(d_min: int = 43, d_max: int = 101) -> list[int]:
        return list(range(max(d_min, 43) | 1, d_max + 1, 2))
