# character_variety/surgery.py – surgery cubics p_d, q_d and their irreducibility certificates
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any

from core_arith.intpoly import IntPoly
from core_arith.modpoly import irreducible_mod_p
from core_arith.resultant import resultant
from core_arith.zfactor import DEFAULT_MAX_DEGREE, expand_factorization, factor_over_Z
from cyclotomic.cyclotomic import real_minimal_poly
from cyclotomic.norms import norm_value
from errors import ConsistencyError, InvalidInputError, UnsupportedSizeError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

IRREDUCIBILITY_D_MAX = 41
_DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)

# ψ₁ = t − 2: ζ₁ = 1 gives t = 2
_PSI_ONE = IntPoly([-2, 1])


def _psi(d: int) -> IntPoly:
    if d % 2 == 0 or d < 1:
        raise InvalidInputError(f"d must be odd and positive, got {d}")
    return _PSI_ONE if d == 1 else real_minimal_poly(d)


@dataclass(frozen=True)
class SurgeryCubic:
    """
    p_d(R) = R³ − tR² − 1 and q_d(r) = p_d(r + 2), t = ζ_d² + ζ_d⁻².

    Coefficient k of each cubic is an IntPoly in t reduced modulo ψ_d.
    """

    d: int
    psi: IntPoly
    p_coeffs: tuple[IntPoly, ...]
    q_coeffs: tuple[IntPoly, ...]

    def specialize(self, t_value: Any, which: str = "p") -> list[Any]:
        """Ascending coefficients after t ↦ t_value."""
        coeffs = self.p_coeffs if which == "p" else self.q_coeffs
        return [c(t_value) for c in coeffs]

    @property
    def constant_norm(self) -> int:
        """N(q_d(0)) = Res(ψ_d, 7 − 4t); equals (−1)^m N(c_d) as −c_d = q_d(0)."""
        return resultant(self.psi, self.q_coeffs[0])

    def as_dict(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "psi": self.psi,
            "p": [c.to_list() for c in self.p_coeffs],
            "q": [c.to_list() for c in self.q_coeffs],
        }


def surgery_cubic(d: int) -> SurgeryCubic:
    psi = _psi(d)
    t = IntPoly.x()
    # (r + 2)³ − t(r + 2)² − 1
    q_raw = [7 - 4 * t, 12 - 4 * t, 6 - t, IntPoly([1])]
    p_raw = [IntPoly([-1]), IntPoly(), -t, IntPoly([1])]
    return SurgeryCubic(
        d=d,
        psi=psi,
        p_coeffs=tuple(c % psi for c in p_raw),
        q_coeffs=tuple(c % psi for c in q_raw),
    )


def norm_cubic(d: int) -> IntPoly:
    """
    F_d(R) = Res_t(ψ_d(t), R³ − tR² − 1) = Σ_k ψ_k R^(2(m−k)) (R³ − 1)^k.

    Monic of degree 3m with constant term (−1)^m.
    """
    psi = _psi(d)
    m = psi.degree
    cube_minus_one = IntPoly([-1, 0, 0, 1])
    acc = IntPoly()
    power = IntPoly([1])
    for k, c in enumerate(psi.coeffs):
        if c:
            acc = acc + IntPoly.monomial(2 * (m - k)) * power * c
        power = power * cube_minus_one
    return acc


# ───────────────────────── irreducibility ─────────────────────────
@dataclass
class IrreducibilityReport:
    d: int
    method: str                      # "mod-p" | "rational-factorization" | "house-bound"
    verdict: str                     # "irreducible" | "reducible" | "inconclusive"
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def irreducible(self) -> bool:
        return self.verdict == "irreducible"

    def as_dict(self) -> dict[str, Any]:
        return {"d": self.d, "method": self.method, "verdict": self.verdict, "witness": self.witness}


def irreducibility_certificate(
    d: int,
    primes: list[int] | tuple[int, ...] | None = None,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> IrreducibilityReport:
    """
    q_d is irreducible over Q(ζ_d + ζ_d⁻¹) when F_d is irreducible over Q,
    since a factorization of q_d there would split its norm F_d.

    Tries F_d mod p for p ∤ d first, then a full factorization over Z.
    """
    if d % 2 == 0:
        raise InvalidInputError(f"d must be odd, got {d}")
    if not 3 <= d <= IRREDUCIBILITY_D_MAX:
        raise UnsupportedSizeError(
            f"d={d} outside 3..{IRREDUCIBILITY_D_MAX}; d ≥ 43 goes through house_bound_check"
        )
    F = norm_cubic(d)
    tried = []
    for p in primes or _DEFAULT_PRIMES:
        if d % p == 0:
            continue
        tried.append(p)
        if irreducible_mod_p(F.reduce(p)):
            logger.debug("F_%d irreducible mod %d", d, p)
            return IrreducibilityReport(d, "mod-p", "irreducible", {"prime": p, "degree": F.degree})

    logger.info("d=%d: no prime among %d tried certifies F_%d; factoring over Z", d, len(tried), d)
    content, factors = factor_over_Z(F, max_degree=max_degree)
    if len(factors) == 1 and factors[0][1] == 1 and abs(content) == 1:
        return IrreducibilityReport(
            d, "rational-factorization", "irreducible", {"primes_tried": tried, "degree": F.degree}
        )
    return IrreducibilityReport(
        d,
        "rational-factorization",
        "inconclusive",
        {"primes_tried": tried, "factors": [(g.to_list(), e) for g, e in factors]},
    )


# ───────────────────────── even-d remark ─────────────────────────
_PRINTED = {
    4: IntPoly([1, 1]) * IntPoly([1, 1, 1]),        # (R + 1)(R² + R + 1)
    8: IntPoly([-1, 1]) * IntPoly([1, 1, 1]),       # (R − 1)(R² + R + 1)
}
# ζ_4² + ζ_4⁻² = −2, ζ_8² + ζ_8⁻² = 0
_EVEN_T = {4: -2, 8: 0}


def printed_factorization_remark(d: int) -> dict[str, Any]:
    """
    p_4 and p_8 over Q: the verified factorization, and whether the printed
    product actually expands back to p_d.
    """
    if d not in _EVEN_T:
        raise InvalidInputError(f"the remark covers d = 4 and d = 8, got {d}")
    p = IntPoly([-1, 0, -_EVEN_T[d], 1])
    content, factors = factor_over_Z(p)
    if expand_factorization(content, factors) != p:
        raise ConsistencyError(f"factorization of p_{d} does not multiply back")
    printed = _PRINTED[d]
    return {
        "d": d,
        "t": _EVEN_T[d],
        "p": p,
        "factors": [g for g, _ in factors],
        "printed_product": printed,
        "printed_matches": printed == p,
    }


def constant_term_matches_norm(d: int) -> bool:
    """Res(ψ_d, q_d(0)) against N(c_d) with the (−1)^m sign of −c_d."""
    sc = surgery_cubic(d)
    m = sc.psi.degree
    return sc.constant_norm == (-1) ** m * norm_value(d)
