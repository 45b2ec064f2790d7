# elliptic_divpoly/checks.py – degree, leading coefficient and 2-adic structure of f_n
from __future__ import annotations

from fractions import Fraction
from typing import Any

from core_arith.integers import valuation
from core_arith.intpoly import IntPoly
from elliptic_divpoly.divpoly import DivPolyTable
from errors import InvalidInputError, VerificationFailure

# x³ + 2x² − 1: f_2 = 4·(this) on the default curve
TWO_TORSION_CUBIC = IntPoly([-1, 0, 2, 1])
# (x + 1)(x² + x + 1) ≡ x³ + 1 (mod 2)
_MOD2_CUBIC = IntPoly([1, 0, 0, 1])


def _require_default(table: DivPolyTable) -> None:
    if not table.curve.is_default:
        raise InvalidInputError("the structure checks are stated for y² = x³ + 2x² − 1")


def expected_degree(n: int) -> int:
    return n * n // 2 + 1 if n % 2 == 0 else (n * n - 1) // 2


def factlist_check(table: DivPolyTable, n: int) -> dict[str, Any]:
    """
    For f_n on the default curve:
      degree     n²/2 + 1 (even n) or (n² − 1)/2 (odd n)
      leading    2n (even) or n (odd)
      odd n      f_n ≡ ±x^deg (mod 4)
      even n     2^(k+1) | f_n with k = v₂(n), and f_n / 2^(k+1) ≡ (x³ + 1)·x^(n²/2 − 2) (mod 2)
    Raises VerificationFailure naming the clause and, where it applies,
    the first offending coefficient index.
    """
    _require_default(table)
    if n < 2:
        raise InvalidInputError(f"n must be ≥ 2, got {n}")
    f = table[n]
    report: dict[str, Any] = {"n": n, "degree": f.degree, "lc": f.lc}

    deg = expected_degree(n)
    if f.degree != deg:
        raise VerificationFailure("degree", n, f"deg f_{n} = {f.degree}, expected {deg}")
    lc = 2 * n if n % 2 == 0 else n
    if f.lc != lc:
        raise VerificationFailure("leading-coefficient", f.degree, f"lc f_{n} = {f.lc}, expected {lc}")

    if n % 2 == 1:
        for i, c in enumerate(f.coeffs[:-1]):
            if c % 4:
                raise VerificationFailure("odd-mod-4", i, f"coefficient of x^{i} in f_{n} is {c}")
        report["mod4_sign"] = 1 if f.lc % 4 == 1 else -1
        return report

    k = valuation(n, 2)
    scale = 2 ** (k + 1)
    for i, c in enumerate(f.coeffs):
        if c % scale:
            raise VerificationFailure("even-2-power", i, f"2^{k + 1} ∤ coefficient {c} of x^{i} in f_{n}")
    expected = (_MOD2_CUBIC * IntPoly.monomial(n * n // 2 - 2)).coeffs_mod(2)
    reduced = IntPoly(c // scale for c in f.coeffs).coeffs_mod(2)
    for i in range(max(len(expected), len(reduced))):
        e = expected[i] if i < len(expected) else 0
        r = reduced[i] if i < len(reduced) else 0
        if e != r:
            raise VerificationFailure("even-mod-2-shape", i, f"f_{n}/2^{k + 1} differs mod 2 at x^{i}")
    report["two_power"] = k + 1
    return report


def divisibility_check(table: DivPolyTable, n: int) -> bool:
    """f_2 | f_n in Z[x] for even n."""
    if n < 2 or n % 2:
        raise InvalidInputError(f"n must be even and ≥ 2, got {n}")
    return table[2].divides(table[n])


def newton_polygon(poly: IntPoly, p: int) -> list[tuple[Fraction, int]]:
    """
    (root valuation, number of roots) per segment of the lower convex hull of
    {(i, v_p(a_i))}. Roots at 0 appear with valuation None.
    """
    if not poly:
        raise InvalidInputError("Newton polygon of the zero polynomial")
    low = 0
    while poly.coeffs[low] == 0:
        low += 1
    pts = [(i, valuation(c, p)) for i, c in enumerate(poly.coeffs) if c and i >= low]
    hull: list[tuple[int, int]] = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] unless it lies strictly below the chord to pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments: list[tuple[Fraction | None, int]] = []
    if low:
        segments.append((None, low))
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append((Fraction(y1 - y2, x2 - x1), x2 - x1))
    return segments


def two_adic_root_valuations(table: DivPolyTable, n: int) -> list[tuple[Fraction | None, int]]:
    """
    2-adic Newton polygon of f_n, with the 2-torsion cubic divided out for
    even n; on the default curve every remaining root has positive valuation.
    """
    _require_default(table)
    f = table[n]
    if n % 2 == 0:
        f = f.exact_div(TWO_TORSION_CUBIC)
    return newton_polygon(f, 2)
