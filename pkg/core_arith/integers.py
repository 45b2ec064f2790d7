# core_arith/integers.py – primality, factorization, residue symbols
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod

import gmpy2
from sympy.ntheory import ecm as lenstra_ecm

from errors import BudgetExceededError, InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

# Miller–Rabin with the first 13 primes as witnesses is deterministic below this
MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)

DEFAULT_TRIAL_BOUND = 1_000_000
DEFAULT_RHO_BUDGET = 200_000
DEFAULT_SEED = 20240607
DEFAULT_ECM_B1 = 10_000
DEFAULT_ECM_B2 = 1_000_000
DEFAULT_ECM_CURVES = 200
DEFAULT_ECM_ROUNDS = 3
_BLOCK = 512


# ───────────────────────── small primes ─────────────────────────
@lru_cache(maxsize=8)
def small_primes(bound: int) -> tuple[int, ...]:
    """All primes ≤ bound (simple sieve, cached)."""
    if bound < 2:
        return ()
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(bound ** 0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, bound + 1, i)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


@lru_cache(maxsize=8)
def _prime_blocks(bound: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    primes = small_primes(bound)
    blocks = []
    for i in range(0, len(primes), _BLOCK):
        chunk = primes[i : i + _BLOCK]
        blocks.append((prod(chunk), chunk))
    return tuple(blocks)


# ───────────────────────── primality ─────────────────────────
def is_prime(n: int) -> bool:
    """
    Deterministic Miller–Rabin below MR_DETERMINISTIC_BOUND.

    Above the bound the strong Baillie–PSW test is used; such primes are
    reported as probable by factor_integer.
    """
    if n < 2:
        return False
    for p in _MR_WITNESSES:
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < 43 * 43:
        return True
    if n < MR_DETERMINISTIC_BOUND:
        return all(gmpy2.is_strong_prp(n, a) for a in _MR_WITNESSES)
    return bool(gmpy2.is_strong_bpsw_prp(n))


def is_square(n: int) -> bool:
    return n >= 0 and bool(gmpy2.is_square(n))


def isqrt(n: int) -> int:
    return int(gmpy2.isqrt(n))


# ───────────────────────── Factorization type ─────────────────────────
@dataclass(frozen=True)
class Factorization:
    """
    sign × ∏ p^e × cofactor.

    cofactor is 1 for a complete factorization; otherwise it is the composite
    part the budgets could not split (coprime to every listed prime).
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    cofactor: int = 1
    probable: tuple[int, ...] = field(default=())

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    @property
    def value(self) -> int:
        return self.sign * prod(p ** e for p, e in self.factors) * self.cofactor

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.factors]

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict:
        return {
            "sign": self.sign,
            "factors": [[p, e] for p, e in self.factors],
            "cofactor": self.cofactor,
            "probable": list(self.probable),
        }

    def __str__(self) -> str:
        parts = [f"{p}^{e}" for p, e in self.factors]
        if self.cofactor != 1:
            parts.append(f"C{len(str(self.cofactor))}")
        body = " * ".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body


# ───────────────────────── factoring engines ─────────────────────────
def _trial_divide(n: int, bound: int, found: dict[int, int]) -> int:
    """Strip all primes ≤ bound; batched gcds skip blocks with no divisor."""
    for block, chunk in _prime_blocks(bound):
        if n == 1:
            break
        if gcd(n, block) == 1:
            continue
        for p in chunk:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                found[p] = found.get(p, 0) + e
    return n


def progression_primes(
    n: int, modulus: int, budget: int, found: dict[int, int] | None = None
) -> int:
    """
    Structured trial division by odd primes p with p² ≡ 1 (mod modulus).

    Prime divisors of real-cyclotomic norms that are coprime to d lie in these
    classes, so the search reaches far past the plain trial bound.  Returns the
    remaining cofactor; primes found are accumulated into `found`.
    """
    found = {} if found is None else found
    step = 2 * modulus
    classes = [r for r in range(1, step, 2) if r * r % modulus == 1 % modulus]
    tried = 0
    k = 0
    batch: list[int] = []
    mpz_n = gmpy2.mpz(n)
    while tried < budget and n > 1:
        for r in classes:
            cand = k * step + r
            if cand > 2 and is_prime(cand):
                batch.append(cand)
        k += 1
        tried += len(classes)
        if len(batch) >= 64:
            if gcd(n, prod(batch)) > 1:
                for p in batch:
                    while n % p == 0:
                        n //= p
                        found[p] = found.get(p, 0) + 1
                mpz_n = gmpy2.mpz(n)
            batch = []
        if n > 1 and k * step > gmpy2.isqrt(mpz_n) + 1:
            break
    for p in batch:
        while n % p == 0:
            n //= p
            found[p] = found.get(p, 0) + 1
    return n


def pollard_brent(n: int, budget: int, rng: random.Random) -> int | None:
    """One nontrivial factor of composite n, or None when the budget runs out."""
    if n % 2 == 0:
        return 2
    N = gmpy2.mpz(n)
    spent = 0
    while spent < budget:
        y = gmpy2.mpz(rng.randrange(1, n))
        c = gmpy2.mpz(rng.randrange(1, n))
        m = 128
        g = r = q = gmpy2.mpz(1)
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % N
            spent += r
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % N
                    q = q * abs(x - y) % N
                g = gmpy2.gcd(q, N)
                k += m
            spent += k
            r *= 2
        if g == N:
            # batch overshot: walk back one step at a time
            while True:
                ys = (ys * ys + c) % N
                g = gmpy2.gcd(abs(x - ys), N)
                if g > 1:
                    break
        if 1 < g < N:
            return int(g)
    return None


def ecm_split(
    n: int,
    *,
    b1: int = DEFAULT_ECM_B1,
    b2: int = DEFAULT_ECM_B2,
    curves: int = DEFAULT_ECM_CURVES,
    rounds: int = DEFAULT_ECM_ROUNDS,
    seed: int = DEFAULT_SEED,
) -> list[int] | None:
    """
    Prime divisors of composite n by Lenstra's elliptic curve method.

    Each failed round multiplies both stage bounds by 5. None when every
    round fails.
    """
    for r in range(rounds):
        B1 = b1 * 5 ** r
        B2 = b2 * 5 ** r
        # the stage bounds must be even
        B1 += B1 % 2
        B2 += B2 % 2
        try:
            primes = lenstra_ecm(n, B1=B1, B2=B2, max_curve=curves, seed=seed + r)
        except ValueError:
            logger.info("ECM round %d (B1=%d) found nothing in a %d-digit composite", r + 1, B1, len(str(n)))
            continue
        divisors_found = sorted(int(p) for p in primes if 1 < p < n and n % p == 0)
        if divisors_found:
            return divisors_found
    return None


def factor_integer(
    n: int,
    *,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
    seed: int = DEFAULT_SEED,
    progression_modulus: int | None = None,
    progression_budget: int = 0,
    ecm_b1: int = DEFAULT_ECM_B1,
    ecm_b2: int = DEFAULT_ECM_B2,
    ecm_curves: int = DEFAULT_ECM_CURVES,
    ecm_rounds: int = DEFAULT_ECM_ROUNDS,
    partial: bool = False,
) -> Factorization:
    """
    Factor n ≠ 0: trial division, optional progression search, Brent rho,
    then ECM on whatever rho could not split.

    With partial=False an unsplittable composite raises BudgetExceededError;
    with partial=True it is returned as the cofactor and the result is not
    complete.
    """
    if n == 0:
        raise InvalidInputError("cannot factor 0")
    sign = -1 if n < 0 else 1
    m = abs(n)
    found: dict[int, int] = {}
    m = _trial_divide(m, trial_bound, found)
    if m > 1 and progression_modulus and progression_budget and not is_prime(m):
        m = progression_primes(m, progression_modulus, progression_budget, found)

    rng = random.Random(seed)
    stack = [m] if m > 1 else []
    leftovers: list[int] = []
    while stack:
        c = stack.pop()
        if c == 1:
            continue
        # already-known primes may divide pieces split off by rho
        for p in list(found):
            while c % p == 0:
                c //= p
                found[p] += 1
        if c == 1:
            continue
        if is_prime(c):
            found[c] = found.get(c, 0) + 1
            continue
        if is_square(c):
            r = isqrt(c)
            stack.extend([r, r])
            continue
        f = pollard_brent(c, rho_budget, rng)
        if f is not None:
            stack.extend([f, c // f])
            continue
        primes = ecm_split(
            c, b1=ecm_b1, b2=ecm_b2, curves=ecm_curves, rounds=ecm_rounds, seed=seed
        )
        if primes is None:
            if not partial:
                raise BudgetExceededError(
                    "factor.ecm_rounds", ecm_rounds, f"{len(str(c))}-digit composite"
                )
            logger.info("rho and ECM exhausted on a %d-digit cofactor", len(str(c)))
            leftovers.append(c)
            continue
        logger.debug("ECM split a %d-digit composite: %s", len(str(c)), primes)
        for p in primes:
            while c % p == 0:
                c //= p
                stack.append(p)
        stack.append(c)

    # primes found after a piece was set aside may still divide it
    for i, c in enumerate(leftovers):
        for p in found:
            while c % p == 0:
                c //= p
                found[p] += 1
        leftovers[i] = c
    cofactor = prod(leftovers) if leftovers else 1
    factors = tuple(sorted(found.items()))
    probable = tuple(p for p, _ in factors if p >= MR_DETERMINISTIC_BOUND)
    return Factorization(sign, factors, cofactor, probable)


# ───────────────────────── residue symbols / orders ─────────────────────────
def jacobi_symbol(a: int, n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise InvalidInputError(f"Jacobi symbol needs odd positive n, got {n}")
    return int(gmpy2.jacobi(a % n, n))


def euler_phi(n: int) -> int:
    if n < 1:
        raise InvalidInputError("phi needs n ≥ 1")
    result = n
    for p, _ in factor_integer(n).factors:
        result = result // p * (p - 1)
    return result


def mobius(n: int) -> int:
    if n < 1:
        raise InvalidInputError("mobius needs n ≥ 1")
    f = factor_integer(n)
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def divisors(n: int) -> list[int]:
    """Positive divisors of n ≥ 1, ascending."""
    if n < 1:
        raise InvalidInputError("divisors needs n ≥ 1")
    divs = [1]
    for p, e in factor_integer(n).factors:
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """Exponent of p in n ≠ 0."""
    if n == 0:
        raise InvalidInputError("valuation of 0 is infinite")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def multiplicative_order(p: int, d: int) -> int:
    """Least m ≥ 1 with p^m ≡ 1 (mod d)."""
    if d < 2:
        raise InvalidInputError(f"modulus must be ≥ 2, got {d}")
    if gcd(p, d) != 1:
        raise InvalidInputError(f"gcd({p}, {d}) ≠ 1")
    p %= d
    order = euler_phi(d)
    for q, _ in factor_integer(order).factors:
        while order % q == 0 and pow(p, order // q, d) == 1:
            order //= q
    return order
