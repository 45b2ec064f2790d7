# beta_sequence/quartic.py – exact arithmetic in Q(i, √15) and the sequence s(n)
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from core_arith.intpoly import IntPoly
from core_arith.resultant import resultant
from cyclotomic.norms import C_QUARTIC, divisor_norm_product
from errors import ConsistencyError, InvalidInputError


@dataclass(frozen=True, init=False)
class QuarticElem:
    """a + b·i + c·√15 + d·i√15 with rational coordinates."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __init__(self, a: Any = 0, b: Any = 0, c: Any = 0, d: Any = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __add__(self, o: QuarticElem) -> QuarticElem:
        return QuarticElem(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __neg__(self) -> QuarticElem:
        return QuarticElem(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, o: QuarticElem) -> QuarticElem:
        return self + (-o)

    def __mul__(self, o: Any) -> QuarticElem:
        if isinstance(o, (int, Fraction)):
            return QuarticElem(self.a * o, self.b * o, self.c * o, self.d * o)
        a1, b1, c1, d1 = self.as_tuple()
        a2, b2, c2, d2 = o.as_tuple()
        return QuarticElem(
            a1 * a2 - b1 * b2 + 15 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 15 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.as_tuple())

    def to_complex(self) -> complex:
        s = 15 ** 0.5
        return complex(float(self.a) + float(self.c) * s, float(self.b) + float(self.d) * s)


ONE = QuarticElem(1)
BETA = QuarticElem(0, Fraction(1, 4), Fraction(1, 4), 0)
GAMMA = QuarticElem(0, Fraction(1, 2), Fraction(1, 2), 0)
# 2γ = i + √15 has integer coordinates
_TWO_GAMMA = QuarticElem(0, 1, 1, 0)


def quartic_pow(x: QuarticElem, n: int) -> QuarticElem:
    if n < 0:
        raise InvalidInputError("negative exponent")
    result, base = ONE, x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _int_pow_two_gamma(n: int) -> tuple[int, int, int, int]:
    """(i + √15)^n on integer coordinates, without Fraction overhead."""
    r = (1, 0, 0, 0)
    b = (0, 1, 1, 0)

    def mul(x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 + 15 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 15 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    while n:
        if n & 1:
            r = mul(r, b)
        n >>= 1
        if n:
            b = mul(b, b)
    return r


def s_of_n(n: int) -> int:
    """2^(n+1) Im(β^n) = 2 × (i-coordinate of γ^n), an integer for odd n."""
    if n < 1 or n % 2 == 0:
        raise InvalidInputError(f"s(n) is defined for odd n ≥ 1, got {n}")
    _, b, _, _ = _int_pow_two_gamma(n)
    q, r = divmod(b, 2 ** (n - 1))
    if r:
        raise ConsistencyError(f"s({n}) is not an integer")
    return q


def s_sign(n: int) -> int:
    s = s_of_n(n)
    return (s > 0) - (s < 0)


# ───────────────────────── audits ─────────────────────────
def parity_grading_holds(n: int) -> bool:
    """γ^n vanishes on {1, i√15} for odd n and on {i, √15} for even n."""
    a, b, c, d = _int_pow_two_gamma(n)
    return (a == 0 and d == 0) if n % 2 else (b == 0 and c == 0)


def s_residue_audit(n: int) -> bool:
    if n < 1 or n % 2 == 0:
        raise InvalidInputError(f"n must be odd and positive, got {n}")
    expected = 1 if n % 4 == 1 else 3
    return s_of_n(n) % 4 == expected


def abs_identity_audit(n: int) -> bool:
    """|∏_{d|n} N(c_d)| = |s(n)| for odd n."""
    return abs(divisor_norm_product(n)) == abs(s_of_n(n))


def product_identity_audit(n: int) -> bool:
    """Signed identity ∏_{d|n} N(c_d) = s(n) for n ≡ 1 (mod 4), n ≥ 5."""
    if n < 5 or n % 4 != 1:
        raise InvalidInputError(f"n must be ≡ 1 (mod 4) and ≥ 5, got {n}")
    return divisor_norm_product(n) == s_of_n(n)


def gamma_minimal_polynomial_audit() -> bool:
    """γ⁴ − 7γ² + 16 = 0."""
    g2 = quartic_pow(GAMMA, 2)
    g4 = g2 * g2
    return (g4 - g2 * 7 + QuarticElem(16)).is_zero()


def resultant_identity_audit(n: int) -> bool:
    """Res(x^n − 1, 4x⁴ − 7x² + 4) = s(n)² for odd n."""
    if n < 1 or n % 2 == 0:
        raise InvalidInputError(f"n must be odd and positive, got {n}")
    xn1 = IntPoly([-1] + [0] * (n - 1) + [1])
    return resultant(xn1, C_QUARTIC) == s_of_n(n) ** 2
