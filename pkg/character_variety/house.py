# character_variety/house.py – real roots of R³ − aR² − 1 and the house-bound exclusion
from __future__ import annotations

import logging
import math

import mpmath
import numpy as np
import pandas as pd

from errors import InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

ROOT_TOL = 1e-12
CUBIC_BOUND = 2.21
# (√7 + √3)/2, the smallest house in [2, 76/33) among real cyclotomic integers
HOUSE_FLOOR = (math.sqrt(7) + math.sqrt(3)) / 2
HOUSE_CEILING = 76 / 33
EXCEPTIONAL_HOUSES = (
    HOUSE_FLOOR,
    math.sqrt(5),
    1 + 2 * math.cos(2 * math.pi / 7),
    (1 + math.sqrt(5)) / math.sqrt(2),
    (1 + math.sqrt(13)) / 2,
)
SEPARATION = 1e-9


def _cubic(a: float, R: float) -> float:
    return R * R * (R - a) - 1


def _bisect(a: float, lo: float, hi: float) -> float:
    flo = _cubic(a, lo)
    while hi - lo > ROOT_TOL:
        mid = (lo + hi) / 2
        fm = _cubic(a, mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def _polish(a: float, R: float) -> float:
    """Two Newton steps at 30 digits."""
    with mpmath.workdps(30):
        x = mpmath.mpf(R)
        for _ in range(2):
            f = x * x * (x - a) - 1
            fp = 3 * x * x - 2 * a * x
            if fp == 0:
                break
            x -= f / fp
        return float(x)


def real_roots(a: float) -> list[float]:
    """
    Real roots of R³ − aR² − 1 by sign changes on the monotone pieces
    cut at the critical points 0 and 2a/3.
    """
    bound = 1 + max(abs(a), 1)
    cuts = sorted({-bound, 0.0, 2 * a / 3, bound})
    roots = []
    for lo, hi in zip(cuts, cuts[1:]):
        flo, fhi = _cubic(a, lo), _cubic(a, hi)
        if flo == 0:
            roots.append(lo)
        elif flo * fhi < 0:
            roots.append(_polish(a, _bisect(a, lo, hi)))
    return roots


def largest_real_root(a: float) -> float:
    """
    Largest absolute value among the real roots of R³ − aR² − 1.

    Below the discriminant zero a* ≈ −1.88988 the two negative roots appear
    and the value jumps.
    """
    if not -2 <= a <= 2:
        raise InvalidInputError(f"a must lie in [-2, 2], got {a}")
    roots = real_roots(float(a))
    return max(abs(r) for r in roots)


def discriminant_jump() -> float:
    """a* with −4a³ − 27 = 0."""
    return -((27 / 4) ** (1 / 3))


def rootplot_frame(a_min: float, a_max: float, steps: int) -> pd.DataFrame:
    if steps < 2:
        raise InvalidInputError(f"steps must be ≥ 2, got {steps}")
    if not -2 <= a_min < a_max <= 2:
        raise InvalidInputError(f"[{a_min}, {a_max}] must be a nonempty subinterval of [-2, 2]")
    grid = np.linspace(a_min, a_max, steps)
    return pd.DataFrame({"a": grid, "root": [largest_real_root(float(a)) for a in grid]})


# ───────────────────────── house bound ─────────────────────────
def conjugate_maximum(d: int) -> tuple[int, float, float]:
    """
    (k, a, root) maximizing largest_real_root over the conjugates
    a = 2cos(4πk/d), gcd(k, d) = 1.
    """
    ks = np.array([k for k in range(1, d) if math.gcd(k, d) == 1])
    a_values = 2 * np.cos(4 * np.pi * ks / d)
    roots = np.array([largest_real_root(float(a)) for a in a_values])
    i = int(np.argmax(roots))
    return int(ks[i]), float(a_values[i]), float(roots[i])


def house_bound_check(d: int) -> bool:
    """The maximal conjugate root clears (√7 + √3)/2 and stays under 2.21."""
    if d % 2 == 0 or d < 43:
        raise InvalidInputError(f"d must be odd and ≥ 43, got {d}")
    _, _, root = conjugate_maximum(d)
    ok = HOUSE_FLOOR + SEPARATION < root < CUBIC_BOUND
    logger.debug("d=%d: conjugate maximum %.14f (%s)", d, root, "clears" if ok else "below")
    return ok


def cms_exclusion(d: int) -> bool:
    """
    A root of p_d in Q(ζ_d + ζ_d⁻¹) would be a real cyclotomic integer whose
    house is the conjugate maximum. In [2, 76/33) only five houses occur;
    missing all of them excludes a rational root.
    """
    if d % 2 == 0 or d < 43:
        raise InvalidInputError(f"d must be odd and ≥ 43, got {d}")
    _, _, root = conjugate_maximum(d)
    if not 2 <= root < HOUSE_CEILING:
        return False
    return all(abs(root - h) > SEPARATION for h in EXCEPTIONAL_HOUSES)
