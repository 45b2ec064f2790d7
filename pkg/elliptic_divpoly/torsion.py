# elliptic_divpoly/torsion.py – Gaussian evaluations and the 2-adic / unit torsion obstructions
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from core_arith.intpoly import IntPoly
from elliptic_divpoly.checks import TWO_TORSION_CUBIC
from elliptic_divpoly.divpoly import DivPolyTable, divpoly_table
from elliptic_divpoly.weierstrass import default_curve
from errors import InvalidInputError, VerificationFailure

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    @staticmethod
    def _coerce(other: Any) -> GaussianInt | None:
        if isinstance(other, GaussianInt):
            return other
        if isinstance(other, int):
            return GaussianInt(other, 0)
        return None

    def __add__(self, other: Any) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other: Any) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> GaussianInt:
        return -self + other

    def __mul__(self, other: Any) -> GaussianInt:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> GaussianInt:
        if e < 0:
            raise InvalidInputError("negative power of a Gaussian integer")
        result, base = GaussianInt(1), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __bool__(self) -> bool:
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def as_dict(self) -> dict[str, int]:
        return {"re": self.re, "im": self.im}


# ───────────────────────── verdicts ─────────────────────────
class TorsionKind(str, Enum):
    NOT_TORSION = "not-torsion"
    TWO_TORSION_CANDIDATE = "two-torsion-candidate"
    INCONCLUSIVE = "inconclusive"


@dataclass
class TorsionVerdict:
    kind: TorsionKind
    reason: str = ""
    audit: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "reason": self.reason, "audit": self.audit}


def birational_map(R: Any, Z: Any) -> tuple[Any, Any]:
    """(R, Z) ↦ (R, RZ); the curve relation becomes y² = x³ + 2x² − 1."""
    return R, R * Z


def _check_monic(poly: IntPoly, what: str) -> None:
    if not poly or poly.degree < 1:
        raise InvalidInputError(f"{what} must have degree ≥ 1")
    if not poly.is_monic():
        raise InvalidInputError(f"{what} must be monic, got {poly}")


def unit_obstruction(r_minpoly: IntPoly, z_integral: bool = True) -> TorsionVerdict:
    """
    R satisfies R³ + (2 − Z²)R² − 1 = 0. With Z integral that cubic is monic
    with constant term −1, so R is a unit: v(x) = 0 above 2, while torsion
    of order > 2 needs positive valuation. Z = 0 gives y = 0, 2-torsion data.

    r_minpoly is that cubic itself, R³ + aR² − 1 with a = 2 − Z². Its monic
    factors may end in +1 (R + 1 at Z = 0) and are refused.
    """
    _check_monic(r_minpoly, "the attested polynomial of R")
    if r_minpoly.degree != 3 or r_minpoly[1] != 0 or r_minpoly[0] != -1:
        raise InvalidInputError(f"expected R³ + aR² − 1, got {r_minpoly}")
    if r_minpoly == TWO_TORSION_CUBIC:
        return TorsionVerdict(TorsionKind.TWO_TORSION_CANDIDATE, "Z = 0 forces y = RZ = 0")
    if not z_integral:
        return TorsionVerdict(TorsionKind.INCONCLUSIVE, "Z not attested integral")
    return TorsionVerdict(
        TorsionKind.NOT_TORSION,
        "R is a unit, so every valuation of x above 2 is zero",
        {"constant_term": r_minpoly.coeffs[0], "degree": r_minpoly.degree},
    )


def torsion_obstruction(x_minpoly: IntPoly) -> TorsionVerdict:
    """
    Torsion points of order > 2 on y² = x³ + 2x² − 1 have x of positive
    valuation at every place above 2. An odd constant term makes the
    valuations (all ≥ 0, summing to 0) vanish.
    """
    _check_monic(x_minpoly, "x_minpoly")
    if x_minpoly.divides(TWO_TORSION_CUBIC):
        return TorsionVerdict(TorsionKind.TWO_TORSION_CANDIDATE, "x is a root of f_2")
    c0 = x_minpoly.coeffs[0]
    if c0 % 2:
        return TorsionVerdict(
            TorsionKind.NOT_TORSION,
            "odd constant term: every valuation of x above 2 is zero",
            {"constant_term": c0},
        )
    return TorsionVerdict(TorsionKind.INCONCLUSIVE, "valuation-positive", {"constant_term": c0})


# ───────────────────────── Gaussian audit ─────────────────────────
def gaussian_divpoly_eval(table: DivPolyTable, n: int, z: GaussianInt) -> GaussianInt:
    value = table[n](z)
    return value if isinstance(value, GaussianInt) else GaussianInt(value)


def intersection_point_audit(max_n: int = 6, table: DivPolyTable | None = None) -> dict[str, Any]:
    """
    f_n(1 ± i) ≠ 0 for 2 ≤ n ≤ max_n. With the torsion subgroup of E(L)
    taken as Z/6Z, the points with x = 1 ± i then have infinite order.
    """
    if table is None:
        table = divpoly_table(default_curve(), max_n)
    rows = []
    for n in range(2, max_n + 1):
        for z in (GaussianInt(1, 1), GaussianInt(1, -1)):
            value = gaussian_divpoly_eval(table, n, z)
            if not value:
                raise VerificationFailure("intersection-point", n, f"f_{n}({z}) = 0")
            rows.append({"n": n, "x": str(z), "value": value})
    logger.info("f_n(1 ± i) nonzero for n ≤ %d", max_n)
    return {
        "evaluations": rows,
        "assumed_torsion_subgroup": "Z/6Z",
        "external_checks": ["torsion subgroup of E(L)", "boundary slope -14/1"],
        "conclusion": "infinite order, conditional on the assumed torsion subgroup",
    }
