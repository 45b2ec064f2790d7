# beta_sequence/angles.py – high-precision prescreen of the sign of s(n)
from __future__ import annotations

from typing import NamedTuple

import mpmath

from errors import InvalidInputError


class AngleEstimate(NamedTuple):
    """frac(n·arg β / 2π) to within ±error."""

    frac: mpmath.mpf
    error: mpmath.mpf

    @property
    def lo(self) -> mpmath.mpf:
        return self.frac - self.error

    @property
    def hi(self) -> mpmath.mpf:
        return self.frac + self.error

    def sign(self) -> int | None:
        """
        Sign of sin(2π·frac), i.e. of s(n): +1 on (0, 1/2), −1 on (1/2, 1).

        None when the interval touches 0, 1/2 or 1.
        """
        half = mpmath.mpf(1) / 2
        if self.lo > 0 and self.hi < half:
            return 1
        if self.lo > half and self.hi < 1:
            return -1
        return None


def angle_prescreen(n: int, precision_bits: int) -> AngleEstimate:
    """
    Interval for frac(n·arg β / 2π), arg β = asin(1/4).

    Working precision grows with the size of n so the interval width stays
    below 2^(−precision_bits/2).
    """
    if precision_bits < 64:
        raise InvalidInputError(f"precision_bits must be ≥ 64, got {precision_bits}")
    if n == 0:
        return AngleEstimate(mpmath.mpf(0), mpmath.mpf(0))
    work = precision_bits + abs(n).bit_length() + 16
    with mpmath.workprec(work):
        theta = mpmath.asin(mpmath.mpf(1) / 4) / (2 * mpmath.pi)
        y = n * theta
        frac = y - mpmath.floor(y)
        error = mpmath.ldexp(abs(n) + 2, -(work - 4))
    return AngleEstimate(frac, error)


def prescreen_sign(n: int, precision_bits: int, max_precision_bits: int) -> int | None:
    """Escalate precision until the sign is decided or max_precision_bits is passed."""
    bits = precision_bits
    while bits <= max_precision_bits:
        s = angle_prescreen(n, bits).sign()
        if s is not None:
            return s
        bits *= 2
    return None
