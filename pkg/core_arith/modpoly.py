# core_arith/modpoly.py – polynomials over the prime field F_p
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable

from core_arith.integers import is_prime
from errors import InvalidInputError


@lru_cache(maxsize=256)
def _prime_modulus(p: int) -> bool:
    return is_prime(p)


@dataclass(frozen=True, init=False)
class ModPoly:
    """Polynomial over F_p, coefficients reduced into [0, p), lowest first."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        if not _prime_modulus(p):
            raise InvalidInputError(f"modulus must be a prime, got {p}")
        c = [int(v) % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(c))

    # ───────────────────────── helpers ─────────────────────────
    def _new(self, coeffs: Iterable[int]) -> ModPoly:
        return ModPoly(self.p, coeffs)

    def _check(self, other: ModPoly) -> None:
        if other.p != self.p:
            raise InvalidInputError(f"mixed moduli {self.p} and {other.p}")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def one(self) -> ModPoly:
        return self._new([1])

    def x(self) -> ModPoly:
        return self._new([0, 1])

    def lift(self):
        """Symmetric-free lift to Z[x] (coefficients stay in [0, p))."""
        from core_arith.intpoly import IntPoly
        return IntPoly(self.coeffs)

    # ───────────────────────── arithmetic ─────────────────────────
    def __add__(self, other: ModPoly) -> ModPoly:
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return self._new(out)

    def __neg__(self) -> ModPoly:
        return self._new(-c for c in self.coeffs)

    def __sub__(self, other: ModPoly) -> ModPoly:
        return self + (-other)

    def __mul__(self, other: Any) -> ModPoly:
        if isinstance(other, int):
            return self._new(c * other for c in self.coeffs)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._new([])
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return ModPoly(p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: ModPoly) -> tuple[ModPoly, ModPoly]:
        self._check(other)
        if not other:
            raise InvalidInputError("division by the zero polynomial")
        p = self.p
        inv = pow(other.lc, -1, p)
        rem = list(self.coeffs)
        dv = other.coeffs
        n = len(dv)
        q = [0] * max(len(rem) - n + 1, 0)
        for k in range(len(rem) - n, -1, -1):
            t = rem[k + n - 1] * inv % p
            if t:
                q[k] = t
                for j, c in enumerate(dv):
                    rem[k + j] = (rem[k + j] - t * c) % p
        return ModPoly(p, q), ModPoly(p, rem)

    def __mod__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: ModPoly) -> ModPoly:
        return divmod(self, other)[0]

    def monic(self) -> ModPoly:
        if not self.coeffs:
            return self
        inv = pow(self.lc, -1, self.p)
        return self * inv

    def gcd(self, other: ModPoly) -> ModPoly:
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> ModPoly:
        return self._new(k * c for k, c in enumerate(self.coeffs) if k)

    def powmod(self, e: int, modulus: ModPoly) -> ModPoly:
        result = self.one() % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def __call__(self, value: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * value + c) % self.p
        return acc

    def pth_root(self) -> ModPoly:
        """g with g(x)^p = self, valid when self' = 0."""
        p = self.p
        return self._new(self.coeffs[k] for k in range(0, len(self.coeffs), p))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not var:
                terms.append(str(c))
            else:
                terms.append(var if c == 1 else f"{c}{var}")
        return " + ".join(terms) + f" (mod {self.p})"


# ─────────────────────────────────────────────────────────────
# Irreducibility and factorization over F_p
# ─────────────────────────────────────────────────────────────
def irreducible_mod_p(f: ModPoly) -> bool:
    """Ben-Or test: gcd(x^(p^i) − x, f) = 1 for every i ≤ deg f / 2."""
    if f.degree < 1:
        raise InvalidInputError("irreducibility needs degree ≥ 1")
    if f.lc == 0 or f.lc % f.p == 0:
        raise InvalidInputError("leading coefficient not invertible")
    g = f.monic()
    if g.degree == 1:
        return True
    x = g.x()
    h = x
    for _ in range(g.degree // 2):
        h = h.powmod(g.p, g)
        if not (h - x).gcd(g).is_one():
            return False
    return True


def squarefree_factorization(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """Monic squarefree parts with multiplicities (char-p aware Yun)."""
    if f.degree < 1:
        return []
    p = f.p
    f = f.monic()
    out: list[tuple[ModPoly, int]] = []

    def _rec(g: ModPoly, mult: int) -> None:
        d = g.derivative()
        if not d:
            if g.degree >= 1:
                _rec(g.pth_root(), mult * p)
            return
        c = g.gcd(d)
        w = g // c
        i = 1
        while not w.is_one():
            y = w.gcd(c)
            z = w // y
            if z.degree >= 1:
                out.append((z.monic(), i * mult))
            i += 1
            w = y
            c = c // y
        if c.degree >= 1:
            _rec(c.pth_root(), mult * p)

    _rec(f, 1)
    out.sort(key=lambda t: (t[1], t[0].degree, t[0].coeffs))
    return out


def distinct_degree_factorization(f: ModPoly) -> list[tuple[ModPoly, int]]:
    """For monic squarefree f: (product of all irreducible factors of degree d, d)."""
    out: list[tuple[ModPoly, int]] = []
    x = f.x()
    h = x
    rest = f.monic()
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(f.p, rest)
        g = (h - x).gcd(rest)
        if not g.is_one():
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree >= 1:
        out.append((rest, rest.degree))
    return out


def equal_degree_factorization(
    f: ModPoly, d: int, rng: random.Random
) -> list[ModPoly]:
    """Cantor–Zassenhaus split of a monic product of degree-d irreducibles."""
    if f.degree == d:
        return [f]
    p = f.p
    n = f.degree
    while True:
        a = ModPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            g = acc.gcd(f)
        else:
            e = (p ** d - 1) // 2
            g = (a.powmod(e, f) - f.one()).gcd(f)
        if 0 < g.degree < n:
            return (
                equal_degree_factorization(g, d, rng)
                + equal_degree_factorization(f // g, d, rng)
            )


def factor_mod_p(f: ModPoly, seed: int = 0) -> list[tuple[ModPoly, int]]:
    """Monic irreducible factors of f over F_p with multiplicities, sorted."""
    rng = random.Random(seed)
    out: list[tuple[ModPoly, int]] = []
    for part, mult in squarefree_factorization(f):
        for block, d in distinct_degree_factorization(part):
            for g in equal_degree_factorization(block, d, rng):
                out.append((g, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs, t[1]))
    return out


def xgcd(a: ModPoly, b: ModPoly) -> tuple[ModPoly, ModPoly, ModPoly]:
    """(g, s, t) with s·a + t·b = g, g monic."""
    zero = ModPoly(a.p, [])
    r0, r1 = a, b
    s0, s1 = a.one(), zero
    t0, t1 = zero, a.one()
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    inv = pow(r0.lc, -1, a.p)
    return r0 * inv, s0 * inv, t0 * inv
