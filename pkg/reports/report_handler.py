# reports/report_handler.py – verification suites behind the `verify` command
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable

import pandas as pd

from beta_sequence.sequence_handler import SequenceHandler
from character_variety.house import conjugate_maximum, largest_real_root
from character_variety.symbols import quadratic_field_square_test, tame_symbol
from character_variety.variety_handler import VarietyHandler
from compute_handler import ComputeManager
from core_arith.intpoly import IntPoly
from cyclotomic.norm_handler import NormHandler
from cyclotomic.norms import norm_cd
from elliptic_divpoly.divpoly_handler import DivPolyHandler
from elliptic_divpoly.torsion import GaussianInt, gaussian_divpoly_eval
from errors import InvalidInputError, VerificationFailure

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

SUITES = (
    "factlist",
    "divisibility",
    "norms",
    "identity",
    "residues",
    "irreducible",
    "house",
    "sequence",
    "audit",
)

# default upper bound per suite; --max-n replaces it
DEFAULT_BOUNDS = {
    "factlist": 64,
    "divisibility": 64,
    "norms": 501,
    "identity": 105,
    "residues": 1001,
    "irreducible": 41,
    "house": 101,
    "sequence": 3,
    "audit": 6,
}

CROSS_CHECK_MAX_D = 201
ORDER_AUDIT_MAX_D = 201
RECURRENCE_MAX_D = 45
LARGEST_ROOT_AT_2 = 2.20556943040059
CONJUGATE_MAX_43 = 2.18763964834393
ROOT_TOL = 1e-9
REPRESENTATION_TOL = 1e-8


def _require(ok: bool, clause: str, index: int | None = None, detail: str = "") -> None:
    if not ok:
        logger.error("verification failed: %s (index %s) %s", clause, index, detail)
        raise VerificationFailure(clause, index, detail)


def _first_where(df: pd.DataFrame, mask: pd.Series, key: str) -> int | None:
    bad = df[~mask]
    return None if bad.empty else int(bad.iloc[0][key])


def _first_false(df: pd.DataFrame, column: str, key: str) -> int | None:
    return _first_where(df, df[column].astype(bool), key)


class VerifyHandler(ComputeManager):
    """
    Runs the named suites against the feature handlers. Each suite returns a
    summary dict; the first failing clause raises VerificationFailure.
    """

    def __init__(self, *args: Any, **kwargs: Any):
        super().__init__(*args, **kwargs)
        self.norms = NormHandler(*args, **kwargs)
        self.sequence = SequenceHandler(*args, **kwargs)
        self.variety = VarietyHandler(*args, **kwargs)
        self.divpoly = DivPolyHandler(*args, **kwargs)

    # ───────────────────────── dispatch ─────────────────────────
    def suite_names(self, suite: str) -> list[str]:
        if suite == "all":
            return list(SUITES)
        if suite not in SUITES:
            raise InvalidInputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
        return [suite]

    def run(self, suite: str, max_n: int | None = None, jobs: int = 1) -> dict[str, Any]:
        runners: dict[str, Callable[[int, int], dict[str, Any]]] = {
            "factlist": self.verify_factlist,
            "divisibility": self.verify_divisibility,
            "norms": self.verify_norms,
            "identity": self.verify_identity,
            "residues": self.verify_residues,
            "irreducible": self.verify_irreducible,
            "house": self.verify_house,
            "sequence": self.verify_sequence,
            "audit": self.verify_audit,
        }
        out: dict[str, Any] = {}
        for name in self.suite_names(suite):
            bound = max_n if max_n is not None and suite != "all" else DEFAULT_BOUNDS[name]
            logger.info("suite %s (bound %d)", name, bound)
            out[name] = runners[name](bound, jobs)
            logger.info("suite %s passed", name)
        return out

    # ───────────────────────── division polynomials ─────────────────────────
    def verify_factlist(self, max_n: int, jobs: int = 1) -> dict[str, Any]:
        if max_n < 2:
            raise InvalidInputError(f"max n must be ≥ 2, got {max_n}")
        df = self.divpoly.factlist_table(max_n)      # raises on the first bad clause
        evens = self.divpoly.divisibility_table(max_n)
        _require(bool(evens["f2_divides"].all()), "f2-divides", _first_false(evens, "f2_divides", "n"))
        vals = self.divpoly.valuation_table(max_n)
        _require(bool(vals["all_positive"].all()), "two-adic-valuation", _first_false(vals, "all_positive", "n"))
        return {"max_n": max_n, "checked": len(df), "even_checked": len(evens)}

    def verify_divisibility(self, max_n: int, jobs: int = 1) -> dict[str, Any]:
        if max_n < 2:
            raise InvalidInputError(f"max n must be ≥ 2, got {max_n}")
        evens = self.divpoly.divisibility_table(max_n)
        _require(bool(evens["f2_divides"].all()), "f2-divides", _first_false(evens, "f2_divides", "n"))
        return {"max_n": max_n, "checked": len(evens)}

    # ───────────────────────── norms ─────────────────────────
    def verify_norms(self, max_d: int, jobs: int = 1) -> dict[str, Any]:
        ds = self.odd_values(None, 3, max_d)
        residues = self.norms.residue_table(ds, jobs)
        _require(bool(residues["ok"].all()), "norm-mod-4", _first_false(residues, "ok", "d"))

        small = [d for d in ds if d <= CROSS_CHECK_MAX_D]
        cross = self.norms.cross_check_table(small, jobs)
        _require(bool(cross["agree"].all()), "norm-cross-check", _first_false(cross, "agree", "d"))

        audit_ds = [d for d in ds if d <= ORDER_AUDIT_MAX_D]
        orders = self.norms.order_audit_table(audit_ds, jobs)
        _require(bool(orders["ok"].all()), "order-bound", _first_false(orders, "ok", "d"))

        recurrence = self.norms.recurrence_table([d for d in ds if d <= RECURRENCE_MAX_D], jobs)
        _require(bool(recurrence["ok"].all()), "prime-recurrence", _first_false(recurrence, "ok", "d"))

        three = norm_cd(3, **self.factor_options)
        _require(list(three.ramified_primes) == [11], "ramified-d3", 3, f"got {list(three.ramified_primes)}")
        return {
            "max_d": max_d,
            "residues_checked": len(residues),
            "cross_checked": len(cross),
            "order_audited": len(orders),
            "recurrence_checked": len(recurrence),
        }

    # ───────────────────────── s(n) ─────────────────────────
    def verify_identity(self, max_n: int, jobs: int = 1) -> dict[str, Any]:
        df = self.sequence.identity_table(max_n)
        _require(bool(df["abs_ok"].all()), "abs-identity", _first_false(df, "abs_ok", "n"))
        signed = df.dropna(subset=["signed_ok"])
        _require(bool(signed["signed_ok"].all()), "signed-identity", _first_false(signed, "signed_ok", "n"))
        res = self.sequence.resultant_identity_table(max_n)
        _require(bool(res["ok"].all()), "resultant-identity", _first_false(res, "ok", "n"))
        _require(self.sequence.parity_ok(max_n), "parity-grading")
        _require(self.sequence.gamma_ok(), "gamma-minimal-polynomial")
        if max_n >= 3:
            row = df[df["n"] == 3].iloc[0]
            _require(row["s"] == 11 and row["norm_product"] == -11, "anchor-n3", 3)
        return {"max_n": max_n, "checked": len(df), "signed_checked": len(signed)}

    def verify_residues(self, max_n: int, jobs: int = 1) -> dict[str, Any]:
        df = self.sequence.s_table(max_n)
        _require(bool(df["residue_ok"].all()), "s-residue", _first_false(df, "residue_ok", "n"))
        return {"max_n": max_n, "checked": len(df)}

    # ───────────────────────── character variety ─────────────────────────
    def verify_irreducible(self, max_d: int, jobs: int = 1) -> dict[str, Any]:
        ds = self.variety.default_odd_range(max_d)
        table = self.variety.irreducibility_table(ds, jobs)
        irreducible = table["verdict"] == "irreducible"
        _require(bool(irreducible.all()), "irreducibility", _first_where(table, irreducible, "d"))
        norms = self.variety.constant_norm_table(ds, jobs)
        _require(bool(norms["ok"].all()), "constant-term-norm", _first_false(norms, "ok", "d"))
        remarks = self.variety.even_remarks()
        p8 = next(r for r in remarks if r["d"] == 8)
        _require(p8["p"] == IntPoly([-1, 0, 0, 1]), "p8-cubic", 8, f"got {p8['p']}")
        return {"max_d": max_d, "checked": len(table), "even_remarks": remarks}

    def verify_house(self, max_d: int, jobs: int = 1) -> dict[str, Any]:
        _require(self.variety.root_window_ok(), "root-window")
        at_two = largest_real_root(2.0)
        _require(abs(at_two - LARGEST_ROOT_AT_2) < ROOT_TOL, "largest-root-at-2", detail=f"{at_two!r}")
        _, _, max43 = conjugate_maximum(43)
        _require(abs(max43 - CONJUGATE_MAX_43) < ROOT_TOL, "conjugate-maximum-43", 43, f"{max43!r}")

        table = self.variety.house_table(self.variety.house_range(43, max_d), jobs)
        above = table[table["d"] >= 45]
        _require(bool(above["house_bound"].all()), "house-bound", _first_false(above, "house_bound", "d"))
        _require(bool(table["cms_exclusion"].all()), "cms-exclusion", _first_false(table, "cms_exclusion", "d"))
        return {"max_d": max_d, "checked": len(table), "largest_root_at_2": at_two, "conjugate_max_43": max43}

    # ───────────────────────── certificates ─────────────────────────
    def verify_sequence(self, count: int, jobs: int = 1) -> dict[str, Any]:
        seq, certs = self.sequence.run_sequence(count=count)
        payload = self.sequence.certificate_payload(seq, certs)
        for c in certs:
            _require(abs(c.norm) % 4 == 3, "certificate-mod-4", c.index, f"d={c.d}")
            _require(c.factorization.complete, "certificate-factorization", c.index, f"d={c.d}")
            _require(bool(c.primes), "certificate-primes", c.index, f"d={c.d}")
        if count >= 3:
            _require(len(payload["primes_union"]) >= 2, "prime-union", detail=f"{payload['primes_union']}")
        return payload

    # ───────────────────────── audits ─────────────────────────
    def verify_audit(self, max_n: int, jobs: int = 1) -> dict[str, Any]:
        table = self.divpoly.table(max(max_n, 4))
        f2 = gaussian_divpoly_eval(table, 2, GaussianInt(1, 1))
        _require(f2 == GaussianInt(-12, 24), "f2-at-1+i", 2, str(f2))
        intersections = self.divpoly.intersection_audit(max_n)

        star = self.variety.star_report("4,-7,4")
        _require(not star.holds, "condition-star", detail="4t² − 7t + 4 should fail")
        degrees = sorted((p.w_degree, p.trace_degree) for p in star.pairs)
        _require((4, 2) in degrees, "condition-star-witness", detail=str(degrees))

        # at R = 2 the residue field is Q(√15); the symbol is the class of −1
        symbol = tame_symbol(0, 1, Fraction(-1, 4), 1, quadratic_field_square_test(15))
        _require(symbol.square_class == -1 and not symbol.trivial, "tame-symbol", detail=str(symbol.value))

        local = self.variety.local_criterion_table()
        agree = local["rule"] == local["explicit"]
        _require(bool(agree.all()), "local-criterion", _first_where(local, agree, "p"))

        reps = self.variety.representation_table()
        worst = float(reps["residual"].max())
        _require(worst < REPRESENTATION_TOL, "representation-residual", detail=f"{worst:.3e}")
        return {
            "intersection_points": intersections,
            "condition_star": star.as_dict(),
            "tame_symbol": symbol.as_dict(),
            "local_criterion_rows": len(local),
            "max_representation_residual": worst,
        }
