# character_variety/symbols.py – tame symbols, the local splitting rule and condition (⋆)
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

import numpy as np

from core_arith.integers import factor_integer, is_prime, is_square, jacobi_symbol
from core_arith.intpoly import IntPoly
from core_arith.modpoly import ModPoly
from core_arith.resultant import resultant
from core_arith.zfactor import DEFAULT_MAX_DEGREE, factor_over_Z
from cyclotomic.cyclotomic import palindromic_expand
from errors import ConsistencyError, InvalidInputError, UnsupportedSizeError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


# ───────────────────────── square classes ─────────────────────────
def squarefree_class(q: Fraction | int) -> int:
    """Squarefree integer representing q in Q*/Q*²."""
    q = Fraction(q)
    if q == 0:
        raise InvalidInputError("0 has no square class")
    n = q.numerator * q.denominator
    fac = factor_integer(abs(n))
    core = 1
    for p, e in fac.factors:
        if e % 2:
            core *= p
    return core if n > 0 else -core


def rational_square_test(q: Fraction | int) -> bool:
    q = Fraction(q)
    return q > 0 and is_square(q.numerator) and is_square(q.denominator)


def quadratic_field_square_test(D: int) -> Callable[[Any], bool]:
    """Square test for rational residues inside Q(√D): q or qD is a rational square."""
    if D == 1 or is_square(D):
        raise InvalidInputError(f"Q(√{D}) is not a quadratic field")

    def test(q: Any) -> bool:
        q = Fraction(q)
        return rational_square_test(q) or rational_square_test(q * D)

    return test


@dataclass(frozen=True)
class TameSymbol:
    value: Fraction
    square_class: int
    trivial: bool

    def as_dict(self) -> dict[str, Any]:
        return {"value": self.value, "square_class": self.square_class, "trivial": self.trivial}


def tame_symbol(
    ord_alpha: int,
    ord_beta: int,
    alpha_res: Any,
    beta_res: Any,
    residue_field_square_test: Callable[[Any], bool] = rational_square_test,
) -> TameSymbol:
    """(−1)^(ord α · ord β) β^(ord α) / α^(ord β) in the residue field, up to squares."""
    alpha_res, beta_res = Fraction(alpha_res), Fraction(beta_res)
    if ord_beta and alpha_res == 0:
        raise InvalidInputError("α-residue is zero but carries a nonzero exponent")
    if ord_alpha and beta_res == 0:
        raise InvalidInputError("β-residue is zero but carries a nonzero exponent")
    sign = -1 if (ord_alpha * ord_beta) % 2 else 1
    value = sign * beta_res ** ord_alpha / alpha_res ** ord_beta
    return TameSymbol(
        value=value,
        square_class=squarefree_class(value),
        trivial=residue_field_square_test(value),
    )


# ───────────────────────── local criterion ─────────────────────────
def local_split_criterion(p: int, f: int) -> str:
    """
    The algebra (−1, ·) at a prime of residue degree f over p is ramified
    iff −1 is a nonsquare in F_(p^f), i.e. p ≡ 3 (mod 4) and f odd.
    """
    if p == 2:
        raise UnsupportedSizeError("the criterion is for non-dyadic primes")
    if p < 2 or not is_prime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p}")
    if f < 1:
        raise InvalidInputError(f"residue degree must be ≥ 1, got {f}")
    # −1 is a square in F_p exactly when (−1/p) = 1; every element of F_p is a square in F_(p²)
    if jacobi_symbol(-1, p) == 1 or f % 2 == 0:
        return "split"
    return "ramified"


def minus_one_square_in_field(p: int, f: int) -> bool:
    """
    Whether X² + 1 has a root in F_(p^f), read off over F_p as
    gcd(X^(p^f) − X, X² + 1) ≠ 1.
    """
    if p < 3 or not is_prime(p) or f < 1:
        raise InvalidInputError(f"need an odd prime and f ≥ 1, got p={p}, f={f}")
    x = ModPoly(p, [0, 1])
    target = ModPoly(p, [1, 0, 1])
    frob = x.powmod(p ** f, target)
    return not (frob - x).gcd(target).is_one()


# ───────────────────────── condition (⋆) ─────────────────────────
@dataclass(frozen=True)
class StarPair:
    w_minpoly: IntPoly
    w_degree: int
    trace_minpoly: IntPoly
    trace_degree: int

    def as_dict(self) -> dict[str, Any]:
        return {
            "w_minpoly": self.w_minpoly,
            "w_degree": self.w_degree,
            "trace_minpoly": self.trace_minpoly,
            "trace_degree": self.trace_degree,
        }


@dataclass(frozen=True)
class ConditionStarReport:
    alexander: IntPoly
    pairs: tuple[StarPair, ...]

    @property
    def holds(self) -> bool:
        return all(p.w_degree == p.trace_degree for p in self.pairs)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def as_dict(self) -> dict[str, Any]:
        return {
            "alexander": self.alexander,
            "pairs": [p.as_dict() for p in self.pairs],
            "verdict": self.verdict,
        }


def _interpolate(points: list[tuple[int, int]]) -> IntPoly:
    """Newton interpolation through integer nodes; the result must be integral."""
    xs = [Fraction(x) for x, _ in points]
    coef = [Fraction(y) for _, y in points]
    n = len(points)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc: list[Fraction] = [Fraction(0)]
    for i in range(n - 1, -1, -1):
        # acc = acc·(x − xs[i]) + coef[i]
        shifted = [Fraction(0)] + acc
        for k, c in enumerate(acc):
            shifted[k] -= xs[i] * c
        shifted[0] += coef[i]
        acc = shifted
    if any(c.denominator != 1 for c in acc):
        raise ConsistencyError("interpolated resultant is not integral")
    return IntPoly(int(c) for c in acc)


def trace_resultant(m: IntPoly) -> IntPoly:
    """H(x) = Res_w(m(w), w² − xw + 1), degree deg m in x, by exact interpolation."""
    n = m.degree
    points = [(x0, resultant(m, IntPoly([1, -x0, 1]))) for x0 in range(n + 1)]
    return _interpolate(points)


def _pair_trace_factor(m: IntPoly, candidates: list[IntPoly]) -> IntPoly:
    """
    The factor h of H annihilating w + w⁻¹ for a root w of m, chosen
    numerically and confirmed by m | w^deg h · h(w + w⁻¹).
    """
    w = complex(np.roots(list(reversed(m.coeffs)))[0])
    y = w + 1 / w

    def score(h: IntPoly) -> float:
        scale = float(max(abs(c) for c in h.coeffs))
        return abs(complex(h(y))) / scale

    for h in sorted(candidates, key=score):
        if m.divides(palindromic_expand(h)):
            return h
    raise ConsistencyError(f"no factor of the trace resultant vanishes at w + 1/w for {m}")


def condition_star(alexander: IntPoly, *, max_degree: int = DEFAULT_MAX_DEGREE) -> ConditionStarReport:
    """
    For every square root w of a root of Δ, compare deg Q(w) with
    deg Q(w + w⁻¹), one irreducible factor of Δ(x²) at a time.
    """
    if not alexander:
        raise InvalidInputError("the Alexander polynomial must be nonzero")
    if alexander.coeffs[0] == 0:
        raise InvalidInputError("the Alexander polynomial must not vanish at 0")
    P = alexander.substitute_power(2)
    if P.degree > max_degree:
        raise UnsupportedSizeError(f"Δ(x²) has degree {P.degree} > {max_degree}")
    _, factors = factor_over_Z(P, max_degree=max_degree)
    pairs = []
    for m, _ in factors:
        _, h_factors = factor_over_Z(trace_resultant(m), max_degree=max_degree)
        h = _pair_trace_factor(m, [g for g, _ in h_factors])
        pairs.append(StarPair(m, m.degree, h, h.degree))
        logger.debug("w-factor %s pairs with trace factor %s", m, h)
    return ConditionStarReport(alexander, tuple(pairs))
