# cyclotomic/cyclotomic.py – Φ_d and the real-subfield minimal polynomial ψ_d
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from core_arith.integers import divisors, euler_phi, mobius
from core_arith.intpoly import IntPoly
from errors import ConsistencyError, InvalidInputError


@dataclass(frozen=True)
class CycData:
    """Cyclotomic data for odd d: φ(d), Φ_d and ψ_d (minimal polynomial of 2cos(2π/d))."""

    d: int
    phi_d: int
    Phi_d: IntPoly
    psi_d: IntPoly


# ───────────────────────── binomial helpers ─────────────────────────
def _times_binomial(a: list[int], e: int) -> list[int]:
    """a · (x^e − 1)."""
    out = [0] * (len(a) + e)
    for k, c in enumerate(a):
        out[k + e] += c
        out[k] -= c
    return out


def _div_binomial(a: list[int], e: int) -> list[int]:
    """a / (x^e − 1), which must be exact."""
    n = len(a) - 1 - e
    if n < 0:
        raise ConsistencyError("binomial divisor of larger degree")
    q = [0] * (n + 1)
    for k in range(n + 1):
        q[k] = (q[k - e] if k >= e else 0) - a[k]
    if _times_binomial(q, e) != a:
        raise ConsistencyError(f"x^{e} - 1 does not divide the running product")
    return q


# ───────────────────────── Φ_d ─────────────────────────
@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> IntPoly:
    """
    Φ_d = ∏_{e|d} (x^e − 1)^μ(d/e).

    The factors with μ = +1 are multiplied out first, so every division by a
    factor x^e − 1 with μ = −1 is exact.
    """
    if d < 1:
        raise InvalidInputError(f"cyclotomic index must be ≥ 1, got {d}")
    num = [1]
    dens = []
    for e in divisors(d):
        mu = mobius(d // e)
        if mu == 1:
            num = _times_binomial(num, e)
        elif mu == -1:
            dens.append(e)
    for e in dens:
        num = _div_binomial(num, e)
    poly = IntPoly(num)
    if poly.lc < 0:
        poly = -poly
    return poly


# ───────────────────────── ψ_d ─────────────────────────
def _dickson_rows(m: int):
    """Yield D_j for j = 0..m, where x^j + x^(-j) = D_j(x + 1/x)."""
    prev2 = [2]          # D_0
    yield prev2
    if m == 0:
        return
    prev1 = [0, 1]       # D_1
    yield prev1
    for _ in range(2, m + 1):
        cur = [0] + prev1
        for k, c in enumerate(prev2):
            cur[k] -= c
        yield cur
        prev2, prev1 = prev1, cur


@lru_cache(maxsize=None)
def real_minimal_poly(d: int) -> IntPoly:
    """Monic ψ_d with x^m ψ_d(x + 1/x) = Φ_d(x), m = φ(d)/2."""
    if d % 2 == 0:
        raise InvalidInputError(f"d must be odd, got {d}")
    if d < 3:
        raise InvalidInputError(f"d must be ≥ 3, got {d}")
    Phi = cyclotomic_poly(d)
    m = Phi.degree // 2
    c = Phi.coeffs
    out = [0] * (m + 1)
    out[0] = c[m]
    for j, row in enumerate(_dickson_rows(m)):
        if j == 0:
            continue
        cj = c[m + j]
        if cj:
            for k, v in enumerate(row):
                out[k] += cj * v
    psi = IntPoly(out)
    if not psi.is_monic():
        raise ConsistencyError(f"ψ_{d} is not monic")
    return psi


def palindromic_expand(psi: IntPoly) -> IntPoly:
    """x^m ψ(x + 1/x) as an integer polynomial; inverse of real_minimal_poly."""
    m = psi.degree
    # (x^2 + 1)^k · x^(m-k)
    acc = IntPoly()
    base = IntPoly([1, 0, 1])
    power = IntPoly([1])
    for k, c in enumerate(psi.coeffs):
        if c:
            acc = acc + IntPoly([0] * (m - k) + list(power.coeffs)) * c
        power = power * base
    return acc


@lru_cache(maxsize=None)
def cyc_data(d: int) -> CycData:
    if d % 2 == 0 or d < 1:
        raise InvalidInputError(f"d must be odd and positive, got {d}")
    Phi = cyclotomic_poly(d)
    psi = real_minimal_poly(d) if d >= 3 else IntPoly([-2, 1])
    if d >= 3 and palindromic_expand(psi) != Phi:
        raise ConsistencyError(f"x^m ψ_{d}(x + 1/x) does not expand to Φ_{d}")
    return CycData(d=d, phi_d=euler_phi(d), Phi_d=Phi, psi_d=psi)
