# character_variety/curve.py – the canonical component of 7_4 and its two-generator representations
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from errors import InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

DEFAULT_TOL = 1e-9


def curve_eval(R: Any, Z: Any) -> Any:
    """R³ − R²Z² + 2R² − 1; exact for ints/Fractions, numeric otherwise."""
    return curve_eval_squared(R, Z * Z)


def curve_eval_squared(R: Any, Z2: Any) -> Any:
    """Same polynomial in terms of Z², so irrational meridian traces stay exact."""
    R2 = R * R
    return R2 * R - R2 * Z2 + 2 * R2 - 1


def _is_exact(v: Any) -> bool:
    return isinstance(v, (int, Fraction))


@dataclass(frozen=True)
class CurvePoint:
    """
    A point (R, Z) = (χ(ab⁻¹), χ(a)) on the canonical component.

    Z2 holds Z² when Z itself is irrational but its square is rational
    (e.g. Z = √15/2); the curve only sees Z².
    """

    R: Any
    Z: Any = None
    Z2: Any = None
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.Z is None and self.Z2 is None:
            raise InvalidInputError("a curve point needs Z or Z²")
        value = self.residual()
        if self.exact:
            if value != 0:
                raise InvalidInputError(f"({self.R}, Z²={self.z_squared}) is off the curve by {value}")
        elif abs(value) > self.tol:
            raise InvalidInputError(f"point off the curve by {abs(value):.3e} > {self.tol:.1e}")

    @classmethod
    def from_square(cls, R: Any, Z2: Any, tol: float = DEFAULT_TOL) -> CurvePoint:
        return cls(R=R, Z2=Z2, tol=tol)

    @property
    def z_squared(self) -> Any:
        return self.Z2 if self.Z2 is not None else self.Z * self.Z

    @property
    def exact(self) -> bool:
        return _is_exact(self.R) and _is_exact(self.z_squared)

    @property
    def r(self) -> Any:
        """Matrix-entry coordinate r = 2 − R."""
        return 2 - self.R

    def residual(self) -> Any:
        return curve_eval_squared(self.R, self.z_squared)


# ───────────────────────── Hilbert symbol entries ─────────────────────────
@dataclass(frozen=True)
class HilbertEntries:
    """Three Brauer-equivalent presentations of the canonical quaternion algebra at a point."""

    r_form: tuple[Any, Any]            # (−r³ + 4r² − 4r − 1, −r)
    intermediate_form: tuple[Any, Any]  # (R³ − 2R² − 1, R − 2)
    trace_form: tuple[Any, Any]         # (Z² − 4, R − 2)

    @property
    def degenerate(self) -> bool:
        """Some entry vanishes: reducible locus (R = 2) or I_a = ±2 (Z² = 4)."""
        return any(e == 0 for pair in (self.r_form, self.trace_form) for e in pair)

    def as_dict(self) -> dict[str, Any]:
        return {
            "r_form": list(self.r_form),
            "intermediate_form": list(self.intermediate_form),
            "trace_form": list(self.trace_form),
            "degenerate": self.degenerate,
        }


def hilbert_symbol_entries(point: CurvePoint) -> HilbertEntries:
    """
    On the curve R²(Z² − 4) = R³ − 2R² − 1, so (Z² − 4, R − 2) and
    (R³ − 2R² − 1, R − 2) differ by the square R²; substituting R = 2 − r
    turns the latter into (−r³ + 4r² − 4r − 1, −r).
    """
    R, r = point.R, point.r
    first = -r * r * r + 4 * r * r - 4 * r - 1
    return HilbertEntries(
        r_form=(first, -r),
        intermediate_form=(R * R * R - 2 * R * R - 1, R - 2),
        trace_form=(point.z_squared - 4, R - 2),
    )


# ───────────────────────── representations ─────────────────────────
def _word(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """w = a b⁻¹ a b⁻¹ a⁻¹ b a⁻¹ b."""
    ai, bi = np.linalg.inv(a), np.linalg.inv(b)
    w = np.eye(2, dtype=complex)
    for m in (a, bi, a, bi, ai, b, ai, b):
        w = w @ m
    return w


def representation_matrices(x: complex, r: complex) -> tuple[np.ndarray, np.ndarray]:
    if x == 0:
        raise InvalidInputError("x must be nonzero")
    x = complex(x)
    a = np.array([[x, 1], [0, 1 / x]], dtype=complex)
    b = np.array([[x, 0], [complex(r), 1 / x]], dtype=complex)
    return a, b


def verify_representation(x: complex, r: complex, tol: float = 1e-8) -> float:
    """
    Max-entry magnitude of ρ(a)ρ(w)² − ρ(w)²ρ(b).

    Small (below tol) exactly when (R, Z) = (2 − r, x + 1/x) is on the curve.
    """
    a, b = representation_matrices(x, r)
    w = _word(a, b)
    w2 = w @ w
    residual = float(np.max(np.abs(a @ w2 - w2 @ b)))
    if residual > tol:
        logger.debug("relation residual %.3e at x=%s, r=%s", residual, x, r)
    return residual


def point_to_representation(R: complex, Z: complex) -> tuple[complex, complex]:
    """(x, r) with x + 1/x = Z and r = 2 − R."""
    x = complex(np.roots([1, -complex(Z), 1])[0])
    return x, 2 - complex(R)


def sample_curve_points(count: int, seed: int = 0) -> list[tuple[complex, complex]]:
    """
    Random points (R, Z): Z drawn in a box of the complex plane, R any root
    of R³ + (2 − Z²)R² − 1.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        Z = complex(rng.uniform(-2, 2), rng.uniform(-0.5, 0.5))
        roots = np.roots([1, 2 - Z * Z, 0, -1])
        R = complex(roots[rng.randrange(3)])
        out.append((R, Z))
    return out
