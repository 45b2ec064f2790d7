# beta_sequence/sequence.py – sign-alternating (n_i) and the certificate list (d_i)
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass
from typing import Any

from beta_sequence.angles import prescreen_sign
from beta_sequence.quartic import s_sign
from core_arith.integers import Factorization, divisors, is_prime
from cyclotomic.norms import norm_cd, norm_value
from errors import BudgetExceededError, ConsistencyError, InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

DEFAULT_BUDGET = 1_000_000
DEFAULT_PRECISION_BITS = 128
DEFAULT_MAX_PRECISION_BITS = 4096


@dataclass(frozen=True)
class SignSequence:
    generators: tuple[int, ...]
    entries: tuple[tuple[int, int], ...]     # (n_i, sign of s(n_i))

    def as_dict(self) -> dict[str, Any]:
        return {
            "generators": list(self.generators),
            "entries": [{"i": i, "n": n, "s_sign": s} for i, (n, s) in enumerate(self.entries, 1)],
        }


@dataclass(frozen=True)
class RamificationCertificate:
    """One d_i with its completely factored norm and the primes ≡ 3 (mod 4) of odd exponent."""

    index: int
    d: int
    norm: int
    factorization: Factorization
    primes: tuple[int, ...]

    @property
    def certified(self) -> bool:
        return self.factorization.complete and bool(self.primes)

    def as_dict(self) -> dict[str, Any]:
        return {
            "index": self.index,
            "d": self.d,
            "norm": self.norm,
            "abs_mod4": abs(self.norm) % 4,
            "factorization": self.factorization.as_dict(),
            "primes": list(self.primes),
            "certified": self.certified,
        }


# ───────────────────────── semigroup ─────────────────────────
def validate_generators(generators: list[int]) -> tuple[int, ...]:
    gens = tuple(sorted(set(generators)))
    if len(gens) < 2:
        raise InvalidInputError("need at least two distinct generators (a single one is lacunary)")
    bad = [g for g in gens if not is_prime(g) or g % 4 != 1]
    if bad:
        raise InvalidInputError(f"generators must be primes ≡ 1 (mod 4): {bad}")
    return gens


def semigroup_elements(generators: tuple[int, ...] | list[int], limit: int) -> list[int]:
    """All products of generator powers in (1, limit], ascending."""
    gens = sorted(set(generators))
    out: list[int] = []
    heap = list(gens)
    heapq.heapify(heap)
    seen = set(heap)
    while heap:
        v = heapq.heappop(heap)
        if v > limit:
            break
        out.append(v)
        for g in gens:
            w = v * g
            if w <= limit and w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)
    return out


# ───────────────────────── (n_i) ─────────────────────────
def build_n_sequence(
    generators: list[int],
    count: int,
    *,
    budget: int = DEFAULT_BUDGET,
    precision_bits: int = DEFAULT_PRECISION_BITS,
    max_precision_bits: int = DEFAULT_MAX_PRECISION_BITS,
) -> SignSequence:
    """
    n_1 = least semigroup element with s(n_1) < 0; then n_i = n_(i−1)·m with
    the least multiplier m giving sign (−1)^i.
    """
    gens = validate_generators(generators)
    if count < 1:
        raise InvalidInputError(f"count must be ≥ 1, got {count}")
    if precision_bits < 64:
        raise InvalidInputError(f"precision must be ≥ 64 bits, got {precision_bits}")
    multipliers = semigroup_elements(gens, budget)

    entries: list[tuple[int, int]] = []
    prev = 1
    for i in range(1, count + 1):
        want = -1 if i % 2 else 1
        for m in multipliers:
            n = prev * m
            guess = prescreen_sign(n, precision_bits, max_precision_bits)
            if guess is not None and guess != want:
                continue
            exact = s_sign(n)
            if guess is not None and exact != guess:
                raise ConsistencyError(f"angle prescreen disagrees with the exact sign at n={n}")
            if exact == want:
                entries.append((n, exact))
                logger.info("n_%d = %d (multiplier %d)", i, n, m)
                prev = n
                break
        else:
            raise BudgetExceededError("sequence.budget", budget, f"no multiplier for step {i}")
    return SignSequence(gens, tuple(entries))


# ───────────────────────── (d_i) ─────────────────────────
def _certificate(index: int, d: int, factor_options: dict[str, Any]) -> RamificationCertificate:
    res = norm_cd(d, require_complete=True, **factor_options)
    if abs(res.value) % 4 != 3:
        raise ConsistencyError(f"|N(c_{d})| ≢ 3 (mod 4)")
    primes = tuple(p for p in res.ramified_primes if d % p)
    if not primes:
        # a product ≡ 3 (mod 4) has such a prime; the factorization is wrong
        raise ConsistencyError(f"N(c_{d}) ≡ 3 (mod 4) but no prime ≡ 3 (mod 4) of odd exponent")
    return RamificationCertificate(
        index=index,
        d=d,
        norm=res.value,
        factorization=res.factorization,
        primes=primes,
    )


def eligible_divisor(n: int, previous: int | None) -> int:
    """Least d | n, d ∤ previous, with N(c_d) < 0."""
    for d in divisors(n):
        if d == 1 or (previous is not None and previous % d == 0):
            continue
        if norm_value(d) < 0:
            return d
    raise ConsistencyError(f"no divisor of {n} outside {previous} has negative norm")


def extract_d_sequence(seq: SignSequence, **factor_options: Any) -> list[RamificationCertificate]:
    certs: list[RamificationCertificate] = []
    previous: int | None = None
    for i, (n, _) in enumerate(seq.entries, 1):
        d = eligible_divisor(n, previous)
        certs.append(_certificate(i, d, factor_options))
        logger.info("d_%d = %d, primes %s", i, d, list(certs[-1].primes))
        previous = n
    ds = [c.d for c in certs]
    if len(set(ds)) != len(ds):
        raise ConsistencyError(f"repeated d in certificate list {ds}")
    return certs


def primes_union(certs: list[RamificationCertificate]) -> list[int]:
    return sorted({p for c in certs for p in c.primes})

