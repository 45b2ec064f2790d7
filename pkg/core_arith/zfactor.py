# core_arith/zfactor.py – factorization in Z[x]: squarefree split, mod-p factoring,
# Hensel lifting and subset recombination
from __future__ import annotations

import logging
from itertools import combinations

from core_arith.integers import isqrt, small_primes
from core_arith.intpoly import IntPoly
from core_arith.modpoly import ModPoly, factor_mod_p, xgcd
from errors import ConsistencyError, InvalidInputError, UnsupportedSizeError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

DEFAULT_MAX_DEGREE = 64
_PRIME_TRIES = 8


# ───────────────────────── helpers mod m ─────────────────────────
def _red(f: IntPoly, m: int) -> IntPoly:
    return IntPoly(c % m for c in f.coeffs)


def _sym(f: IntPoly, m: int) -> IntPoly:
    half = m // 2
    return IntPoly((c % m) - m if c % m > half else c % m for c in f.coeffs)


def _divmod_monic(a: IntPoly, b: IntPoly, m: int) -> tuple[IntPoly, IntPoly]:
    """Division by a monic divisor modulo m."""
    rem = [c % m for c in a.coeffs]
    dv = b.coeffs
    n = len(dv)
    q = [0] * max(len(rem) - n + 1, 0)
    for k in range(len(rem) - n, -1, -1):
        t = rem[k + n - 1] % m
        if t:
            q[k] = t
            for j, c in enumerate(dv):
                rem[k + j] = (rem[k + j] - t * c) % m
    return _red(IntPoly(q), m), _red(IntPoly(rem), m)


def _monic_mod(f: IntPoly, m: int) -> IntPoly:
    inv = pow(f.lc, -1, m)
    return _red(f * inv, m)


# ───────────────────────── squarefree decomposition ─────────────────────────
def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Musser/Yun over Z for primitive f with positive leading coefficient."""
    out: list[tuple[IntPoly, int]] = []
    c = f.gcd(f.derivative())
    w = f.exact_div(c)
    i = 1
    while w.degree > 0:
        y = w.gcd(c)
        z = w.exact_div(y)
        if z.degree > 0:
            out.append((z if z.lc > 0 else -z, i))
        i += 1
        w = y
        c = c.exact_div(y)
    return out


# ───────────────────────── Hensel lifting ─────────────────────────
def _hensel_step(f, g, h, s, t, m):
    """f ≡ g·h, s·g + t·h ≡ 1 (mod m), g and h monic → same relations mod m²."""
    M = m * m
    e = _red(f - g * h, M)
    q, r = _divmod_monic(s * e, h, M)
    g2 = _red(g + t * e + q * g, M)
    h2 = _red(h + r, M)
    b = _red(s * g2 + t * h2 - 1, M)
    c, d = _divmod_monic(s * b, h2, M)
    s2 = _red(s - d, M)
    t2 = _red(t - t * b - c * g2, M)
    return g2, h2, s2, t2


def _product_mod(polys: list[IntPoly], m: int) -> IntPoly:
    acc = IntPoly([1])
    for g in polys:
        acc = _red(acc * g, m)
    return acc


def hensel_lift(f: IntPoly, factors: list[ModPoly], doublings: int) -> tuple[list[IntPoly], int]:
    """
    Lift the monic factorization f ≡ lc·∏ factors (mod p) to mod p^(2^doublings).

    Returns the lifted monic factors and the final modulus.
    """
    p = factors[0].p
    M = p ** (2 ** doublings)
    target = _monic_mod(f, M)

    def _lift(F: IntPoly, facs: list[ModPoly]) -> list[IntPoly]:
        if len(facs) == 1:
            return [F]
        mid = len(facs) // 2
        left, right = facs[:mid], facs[mid:]
        gbar = ModPoly(p, [1])
        for x in left:
            gbar = gbar * x
        hbar = ModPoly(p, [1])
        for x in right:
            hbar = hbar * x
        one, sbar, tbar = xgcd(gbar, hbar)
        if not one.is_one():
            raise ConsistencyError("modular factors are not coprime")
        g, h = gbar.lift(), hbar.lift()
        s, t = sbar.lift(), tbar.lift()
        m = p
        for _ in range(doublings):
            Fm = _red(F, m * m)
            g, h, s, t = _hensel_step(Fm, g, h, s, t, m)
            m *= m
        return _lift(g, left) + _lift(h, right)

    return _lift(target, factors), M


# ───────────────────────── recombination ─────────────────────────
def _coefficient_bound(f: IntPoly) -> int:
    """|lc| · 2^n · ‖f‖₂ bounds every coefficient of lc·g for g | f."""
    norm2 = isqrt(sum(c * c for c in f.coeffs)) + 1
    return abs(f.lc) * (2 ** f.degree) * norm2


def _choose_prime(f: IntPoly, seed: int) -> tuple[int, list[ModPoly]]:
    best: tuple[int, list[ModPoly]] | None = None
    tried = 0
    for p in small_primes(10_000)[1:]:
        if f.lc % p == 0:
            continue
        fbar = f.reduce(p)
        if not fbar.gcd(fbar.derivative()).is_one():
            continue
        facs = [g for g, _ in factor_mod_p(fbar, seed=seed)]
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        tried += 1
        if len(facs) == 1 or tried >= _PRIME_TRIES:
            break
    if best is None:
        raise ConsistencyError(f"no good reduction prime found for {f}")
    return best


def _factor_squarefree(f: IntPoly, seed: int) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree f with positive lc."""
    if f.degree <= 1:
        return [f]
    p, modular = _choose_prime(f, seed)
    if len(modular) == 1:
        return [f]
    bound = 2 * _coefficient_bound(f) + 1
    doublings = 0
    while p ** (2 ** doublings) <= bound:
        doublings += 1
    lifted, M = hensel_lift(f, modular, doublings)
    logger.debug("lifted %d modular factors of degree-%d poly mod %d^%d",
                 len(lifted), f.degree, p, 2 ** doublings)

    result: list[IntPoly] = []
    F = f
    remaining = list(lifted)
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for subset in combinations(range(len(remaining)), size):
            cand = _sym(_red(F.lc * _product_mod([remaining[i] for i in subset], M), M), M)
            g = cand.primitive_part()
            if g.lc < 0:
                g = -g
            if g.divides(F):
                result.append(g)
                F = F.exact_div(g)
                remaining = [r for i, r in enumerate(remaining) if i not in subset]
                hit = True
                break
        if not hit:
            size += 1
    if F.degree > 0:
        result.append(F if F.lc > 0 else -F)
    return result


def factor_over_Z(
    f: IntPoly, *, max_degree: int = DEFAULT_MAX_DEGREE, seed: int = 0
) -> tuple[int, list[tuple[IntPoly, int]]]:
    """
    content × ∏ factor^e = f, factors primitive, irreducible over Q, positive lc.

    Factors are listed by ascending degree, then coefficients.
    """
    if not f:
        raise InvalidInputError("cannot factor the zero polynomial")
    if f.degree > max_degree:
        raise UnsupportedSizeError(f"degree {f.degree} exceeds the bound {max_degree}")
    content = f.content()
    if f.lc < 0:
        content = -content
    g = IntPoly(c // content for c in f.coeffs)
    if g.degree == 0:
        return content, []

    factors: list[tuple[IntPoly, int]] = []
    low = 0
    while g.coeffs[low] == 0:
        low += 1
    if low:
        factors.append((IntPoly.x(), low))
        g = IntPoly(g.coeffs[low:])

    if g.degree > 0:
        for part, mult in squarefree_decomposition(g):
            for h in _factor_squarefree(part, seed):
                factors.append((h, mult))

    factors.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return content, factors


def expand_factorization(content: int, factors: list[tuple[IntPoly, int]]) -> IntPoly:
    acc = IntPoly([content])
    for g, e in factors:
        acc = acc * g ** e
    return acc
