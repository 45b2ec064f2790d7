# elliptic_divpoly/divpoly.py – x-only division polynomials f_n
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from core_arith.intpoly import IntPoly
from elliptic_divpoly.weierstrass import WeierstrassCurve
from errors import InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class DivPolyTable:
    """f_1..f_N; f_n = ψ_n for odd n and ψ_n·ψ_2 for even n, so f_2 = ψ_2²."""

    curve: WeierstrassCurve
    N: int
    polys: tuple[IntPoly, ...]          # polys[n - 1] = f_n

    def __getitem__(self, n: int) -> IntPoly:
        if not 1 <= n <= self.N:
            raise InvalidInputError(f"f_{n} outside the table 1..{self.N}")
        return self.polys[n - 1]

    def __len__(self) -> int:
        return self.N

    def as_dict(self) -> dict[str, Any]:
        return {
            "curve": self.curve.as_dict(),
            "N": self.N,
            "f": [{"n": n, "coeffs": f.to_list()} for n, f in enumerate(self.polys, 1)],
        }


def seed_polys(curve: WeierstrassCurve) -> tuple[IntPoly, IntPoly, IntPoly, IntPoly]:
    b2, b4, b6, b8 = curve.b2, curve.b4, curve.b6, curve.b8
    f1 = IntPoly([1])
    f2 = IntPoly([b6, 2 * b4, b2, 4])
    f3 = IntPoly([b8, 3 * b6, 3 * b4, b2, 3])
    g4 = IntPoly([b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2])
    return f1, f2, f3, f2 * g4


def divpoly_table(curve: WeierstrassCurve, N: int) -> DivPolyTable:
    """
    Three recursions from the seeds f_1..f_4, n = 2m or 2m + 1:

      n even      f_2·f_n  = f_m(f_(m−1)²·f_(m+2) − f_(m−2)·f_(m+1)²)
      n ≡ 1 (4)   f_2²·f_n = f_(m+2)·f_m³ − f_2²·f_(m−1)·f_(m+1)³
      n ≡ 3 (4)   f_2²·f_n = f_2²·f_(m+2)·f_m³ − f_(m−1)·f_(m+1)³

    Each division is exact; exact_div raises ConsistencyError otherwise.
    """
    if N < 1:
        raise InvalidInputError(f"N must be ≥ 1, got {N}")
    f: list[IntPoly] = [IntPoly()]       # f[0] unused
    f.extend(seed_polys(curve)[: min(N, 4)])
    if N > 4:
        f2 = f[2]
        f2sq = f2 * f2
        for n in range(5, N + 1):
            m = n // 2
            if n % 2 == 0:
                num = f[m] * (f[m - 1] * f[m - 1] * f[m + 2] - f[m - 2] * f[m + 1] * f[m + 1])
                f.append(num.exact_div(f2))
            elif n % 4 == 1:
                num = f[m + 2] * f[m] ** 3 - f2sq * f[m - 1] * f[m + 1] ** 3
                f.append(num.exact_div(f2sq))
            else:
                num = f2sq * f[m + 2] * f[m] ** 3 - f[m - 1] * f[m + 1] ** 3
                f.append(num.exact_div(f2sq))
    logger.debug("division polynomials built up to n=%d for %s", N, curve.coeffs)
    return DivPolyTable(curve=curve, N=N, polys=tuple(f[1 : N + 1]))
