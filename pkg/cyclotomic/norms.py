# cyclotomic/norms.py – N(c_d) for c_d = 4(ζ_d² + ζ_d⁻²) − 7 and ramified primes
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from core_arith.integers import (
    Factorization,
    divisors,
    factor_integer,
    is_prime,
    is_square,
    isqrt,
    multiplicative_order,
)
from core_arith.intpoly import IntPoly
from core_arith.modpoly import ModPoly
from core_arith.resultant import resultant
from cyclotomic.cyclotomic import cyc_data
from errors import ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

# 4x⁴ − 7x² + 4 = x² · (4(x² + x⁻²) − 7)
C_QUARTIC = IntPoly([4, 0, -7, 0, 4])


@dataclass(frozen=True)
class NormResult:
    d: int
    value: int
    residue_mod4: int
    factorization: Factorization
    ramified_primes: tuple[int, ...]

    @property
    def complete(self) -> bool:
        return self.factorization.complete

    @property
    def cofactor(self) -> int:
        return self.factorization.cofactor

    def as_row(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "norm": self.value,
            "abs_mod4": self.residue_mod4,
            "factorization": str(self.factorization),
            "ramified_primes": list(self.ramified_primes),
            "cofactor": self.cofactor,
            "complete": self.complete,
        }


def _check_odd(d: int) -> None:
    if d < 1 or d % 2 == 0:
        raise InvalidInputError(f"d must be odd and positive, got {d}")


# ───────────────────────── the norm itself ─────────────────────────
@lru_cache(maxsize=None)
def norm_value(d: int) -> int:
    """
    (−4)^m ψ_d(7/4) with denominators cleared: (−1)^m Σ ψ_k 7^k 4^(m−k).

    d = 1 gives c₁ = 1.
    """
    _check_odd(d)
    if d == 1:
        return 1
    data = cyc_data(d)
    psi = data.psi_d
    m = data.phi_d // 2
    c = psi.coeffs
    acc = c[m]
    pow4 = 1
    for k in range(m - 1, -1, -1):
        pow4 *= 4
        acc = acc * 7 + c[k] * pow4
    value = -acc if m % 2 else acc
    if value % 4 != 1:
        raise ConsistencyError(f"N(c_{d}) = {value} is not ≡ 1 (mod 4)")
    return value


def ramified_from(factorization: Factorization) -> tuple[int, ...]:
    return tuple(p for p, e in factorization.factors if p % 4 == 3 and e % 2 == 1)


def norm_cd(d: int, *, require_complete: bool = False, **factor_options: Any) -> NormResult:
    """
    Signed norm of c_d from Q(ζ_d + ζ_d⁻¹) to Q, factored.

    factor_options go to factor_integer. With require_complete the norm must
    split into primes or BudgetExceededError is raised; otherwise an unsplit
    composite stays in the cofactor and the result is marked incomplete.
    """
    value = norm_value(d)
    if d == 1:
        fac = Factorization(1, ())
    else:
        opts = dict(factor_options)
        opts.setdefault("progression_modulus", d)
        opts.setdefault("progression_budget", 20_000)
        fac = factor_integer(value, partial=not require_complete, **opts)
    if fac.value != value:
        raise ConsistencyError(f"factorization of N(c_{d}) does not multiply back")
    if not fac.complete:
        logger.warning("N(c_%d): %d-digit cofactor left unfactored", d, len(str(fac.cofactor)))
    return NormResult(
        d=d,
        value=value,
        residue_mod4=abs(value) % 4,
        factorization=fac,
        ramified_primes=ramified_from(fac),
    )


def norm_cd_via_resultant(d: int) -> int:
    """Res(Φ_d, 4x⁴ − 7x² + 4) = N(c_d)²; the sign follows from N(c_d) ≡ 1 (mod 4)."""
    _check_odd(d)
    if d < 3:
        raise InvalidInputError(f"d must be ≥ 3, got {d}")
    sq = resultant(cyc_data(d).Phi_d, C_QUARTIC)
    if not is_square(sq):
        raise ConsistencyError(f"Res(Φ_{d}, 4x⁴−7x²+4) = {sq} is not a square")
    s = isqrt(sq)
    return s if s % 4 == 1 else -s


def surgery_ramified_primes(d: int, **factor_options: Any) -> list[int]:
    if d == 1:
        return []
    return list(norm_cd(d, require_complete=True, **factor_options).ramified_primes)


def order_bound_audit(d: int, **factor_options: Any) -> bool:
    """
    Every prime p ∤ d dividing N(c_d) has order 1 or 2 modulo d.

    The norm must be split completely; an unfactored cofactor fails the audit.
    """
    res = norm_cd(d, **factor_options)
    if not res.complete:
        logger.error("N(c_%d): factorization incomplete, audit cannot pass", d)
        return False
    for p, _ in res.factorization.factors:
        if d % p == 0:
            continue
        order = multiplicative_order(p, d)
        if order not in (1, 2):
            logger.error("N(c_%d): prime %d has order %d", d, p, order)
            return False
    return True


def prime_recurrence(p: int) -> list[int]:
    """
    Odd d ≥ 3 with p ∤ d and p | N(c_d).

    A prime above p divides c_d exactly when y = ζ_d² is a root of
    4y² − 7y + 4 in F_(p²); d is then the multiplicative order of that root,
    which divides p² − 1. Both roots are inverse to each other, so the list
    has at most one entry.
    """
    if p < 3 or not is_prime(p):
        raise InvalidInputError(f"p must be an odd prime, got {p}")
    quad = ModPoly(p, [4, -7, 4])
    y = quad.x()
    order = p * p - 1
    if not y.powmod(order, quad).is_one():
        # repeated root (p = 3, 5): y = −1 + nilpotent never has order prime to p
        return []
    for q, _ in factor_integer(order).factors:
        while order % q == 0 and y.powmod(order // q, quad).is_one():
            order //= q
    return [order] if order % 2 == 1 and order >= 3 else []


def divisor_norm_product(n: int) -> int:
    """∏_{d|n} N(c_d), with the d = 1 term equal to 1."""
    _check_odd(n)
    acc = 1
    for d in divisors(n):
        acc *= norm_value(d)
    return acc
