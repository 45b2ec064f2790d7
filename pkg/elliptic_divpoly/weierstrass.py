# elliptic_divpoly/weierstrass.py – integral Weierstrass models and their invariants
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from core_arith.intpoly import IntPoly
from errors import ConsistencyError, SingularCurveError

# y² = x³ + 2x² − 1, the model the canonical component maps onto
DEFAULT_COEFFS = (0, 2, 0, 0, -1)


@dataclass(frozen=True)
class WeierstrassCurve:
    """y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6 with integer a_i."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int

    @property
    def coeffs(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    @property
    def b2(self) -> int:
        return self.a1 ** 2 + 4 * self.a2

    @property
    def b4(self) -> int:
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self) -> int:
        return self.a3 ** 2 + 4 * self.a6

    @property
    def b8(self) -> int:
        a1, a2, a3, a4, a6 = self.coeffs
        return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4

    @property
    def c4(self) -> int:
        return self.b2 ** 2 - 24 * self.b4

    @property
    def c6(self) -> int:
        return -self.b2 ** 3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def disc(self) -> int:
        b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
        return -b2 * b2 * b8 - 8 * b4 ** 3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def j(self) -> Fraction:
        return Fraction(self.c4 ** 3, self.disc)

    @property
    def is_default(self) -> bool:
        return self.coeffs == DEFAULT_COEFFS

    def weierstrass_rhs(self) -> IntPoly:
        """
        x³ + a2x² + a4x + a6 when a1 = a3 = 0; otherwise 4x³ + b2x² + 2b4x + b6,
        which is (2y + a1x + a3)² and equals four times the completed cubic.
        """
        if self.a1 == 0 and self.a3 == 0:
            return IntPoly([self.a6, self.a4, self.a2, 1])
        return IntPoly([self.b6, 2 * self.b4, self.b2, 4])

    def as_dict(self) -> dict[str, Any]:
        return {
            "a": list(self.coeffs),
            "b2": self.b2,
            "b4": self.b4,
            "b6": self.b6,
            "b8": self.b8,
            "c4": self.c4,
            "c6": self.c6,
            "disc": self.disc,
            "j": self.j,
        }


def curve_invariants(a1: int, a2: int, a3: int, a4: int, a6: int) -> WeierstrassCurve:
    curve = WeierstrassCurve(int(a1), int(a2), int(a3), int(a4), int(a6))
    if 4 * curve.b8 != curve.b2 * curve.b6 - curve.b4 ** 2:
        raise ConsistencyError(f"4·b8 ≠ b2·b6 − b4² for {curve.coeffs}")
    if curve.disc == 0:
        raise SingularCurveError(f"curve {curve.coeffs} is singular (Δ = 0)")
    return curve


def default_curve() -> WeierstrassCurve:
    return curve_invariants(*DEFAULT_COEFFS)
