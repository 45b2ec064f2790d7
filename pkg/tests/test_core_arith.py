import random
import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

import pytest
import sympy
from sympy.polys.subresultants_qq_zz import sylvester

from core_arith.integers import (
    divisors,
    ecm_split,
    factor_integer,
    is_prime,
    jacobi_symbol,
    multiplicative_order,
    small_primes,
    valuation,
)
from core_arith.intpoly import IntPoly
from core_arith.modpoly import ModPoly, factor_mod_p, irreducible_mod_p
from core_arith.resultant import resultant
from core_arith.zfactor import expand_factorization, factor_over_Z
from errors import BudgetExceededError, ConsistencyError, InvalidInputError, UnsupportedSizeError

X = sympy.Symbol("x")


def to_sympy(f: IntPoly):
    return sympy.Poly(list(reversed(f.coeffs)) or [0], X)


def random_poly(rng: random.Random, degree: int, bound: int = 9) -> IntPoly:
    coeffs = [rng.randint(-bound, bound) for _ in range(degree)]
    coeffs.append(rng.choice([c for c in range(-bound, bound + 1) if c]))
    return IntPoly(coeffs)


# ───────────────────────── integers ─────────────────────────
@pytest.mark.parametrize("n", [2, 3, 11, 61, 2339, 765181, 443743561, 2**61 - 1, 2**127 - 1])
def test_is_prime_accepts_primes(n):
    assert is_prime(n)


@pytest.mark.parametrize("n", [0, 1, 4, 561, 3215031751, 765181 * 443743561, (2**61 - 1) * (2**89 - 1)])
def test_is_prime_rejects_composites(n):
    assert not is_prime(n)


def test_is_prime_matches_sympy_on_random_sample():
    rng = random.Random(7)
    for _ in range(500):
        n = rng.randrange(1, 10**12)
        assert is_prime(n) == sympy.isprime(n)


def test_small_primes():
    assert small_primes(30) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)


def test_factor_integer_complete():
    f = factor_integer(-(2**2) * 3**3 * 11)
    assert f.sign == -1
    assert f.factors == ((2, 2), (3, 3), (11, 1))
    assert f.complete


def test_factor_integer_splits_norm_of_65():
    f = factor_integer(765181 * 443743561)
    assert f.primes == [765181, 443743561]
    assert f.value == 765181 * 443743561


def test_factor_integer_partial_keeps_cofactor():
    n = 3 * (2**61 - 1) * (2**89 - 1)
    f = factor_integer(n, trial_bound=1000, rho_budget=10, ecm_rounds=0, partial=True)
    assert not f.complete
    assert f.primes == [3]
    assert f.cofactor == (2**61 - 1) * (2**89 - 1)
    assert f.value == n


def test_factor_integer_budget_exhausted():
    with pytest.raises(BudgetExceededError):
        factor_integer((2**61 - 1) * (2**89 - 1), trial_bound=1000, rho_budget=10, ecm_rounds=0)


def test_ecm_rescues_when_rho_gives_up():
    n = (2**31 - 1) * (2**61 - 1)
    f = factor_integer(n, trial_bound=1000, rho_budget=10)
    assert f.complete
    assert f.primes == [2**31 - 1, 2**61 - 1]


def test_ecm_split_direct():
    assert ecm_split(1000003 * 998244353) == [1000003, 998244353]
    assert ecm_split(1000003 * 998244353, rounds=0) is None


def test_factor_integer_splits_68_digit_norm_cofactor():
    # left over after the small primes of the norm at d = 325
    primes = [68433666601, 9044943117678001, 166571026174355401, 99618438099008600108999]
    n = primes[0] * primes[1] * primes[2] * primes[3]
    f = factor_integer(n)
    assert f.complete
    assert f.cofactor == 1
    assert f.primes == primes
    assert primes[-1] % 4 == 3


def test_factor_integer_rejects_zero():
    with pytest.raises(InvalidInputError):
        factor_integer(0)


def test_divisors_valuation_order():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert valuation(48, 2) == 4
    assert multiplicative_order(11, 3) == 2
    assert multiplicative_order(2339, 13) in (1, 2)
    with pytest.raises(InvalidInputError):
        multiplicative_order(3, 9)


def test_jacobi_symbol_matches_euler_criterion():
    rng = random.Random(9)
    for p in small_primes(10_000)[1:]:
        sample = range(-p, 2 * p) if p < 1000 else [rng.randrange(-p, 2 * p) for _ in range(100)]
        for a in sample:
            if a % p == 0:
                expected = 0
            else:
                expected = 1 if pow(a, (p - 1) // 2, p) == 1 else -1
            assert jacobi_symbol(a, p) == expected
    assert jacobi_symbol(2, 15) == jacobi_symbol(2, 3) * jacobi_symbol(2, 5)
    with pytest.raises(InvalidInputError):
        jacobi_symbol(1, 8)


# ───────────────────────── polynomials ─────────────────────────
def test_from_string_is_ascending():
    f = IntPoly.from_string("4,-7,4")
    assert f.coeffs == (4, -7, 4)
    assert f.degree == 2
    assert not IntPoly.from_string("0,0")
    with pytest.raises(InvalidInputError):
        IntPoly.from_string("1,a")


def test_products_match_sympy():
    rng = random.Random(1)
    for _ in range(20):
        f, g = random_poly(rng, rng.randint(0, 6)), random_poly(rng, rng.randint(0, 6))
        assert to_sympy(f * g) == to_sympy(f) * to_sympy(g)


def test_exact_division():
    f = IntPoly([-1, 0, 2, 1])          # x³ + 2x² − 1 = (x + 1)(x² + x − 1)
    assert f.exact_div(IntPoly([1, 1])) == IntPoly([-1, 0, 1])
    assert IntPoly([1, 1]).divides(f)
    assert not IntPoly([1, 0, 1]).divides(f)
    with pytest.raises(ConsistencyError):
        f.exact_div(IntPoly([1, 0, 1]))


def test_horner_evaluation():
    f = IntPoly([-1, 0, 2, 1])
    assert f(-1) == 0
    assert f(2) == 15
    assert f(1j) == -1 - 2 - 1j


@pytest.mark.parametrize("seed", range(6))
def test_resultant_matches_sympy(seed):
    rng = random.Random(seed)
    f, g = random_poly(rng, rng.randint(1, 6)), random_poly(rng, rng.randint(1, 6))
    assert resultant(f, g) == sympy.resultant(to_sympy(f).as_expr(), to_sympy(g).as_expr(), X)


@pytest.mark.parametrize("seed", range(10))
def test_resultant_antisymmetry_and_sylvester_determinant(seed):
    rng = random.Random(100 + seed)
    f, g = random_poly(rng, rng.randint(1, 6)), random_poly(rng, rng.randint(1, 6))
    res = resultant(f, g)
    assert res == (-1) ** (f.degree * g.degree) * resultant(g, f)
    matrix = sylvester(to_sympy(f).as_expr(), to_sympy(g).as_expr(), X)
    assert res == matrix.det()


def test_resultant_with_constant():
    assert resultant(IntPoly([5]), IntPoly([1, 0, 1])) == 25
    assert resultant(IntPoly([-1, 0, 0, 1]), IntPoly([4, 0, -7, 0, 4])) == 121


# ───────────────────────── factoring ─────────────────────────
def test_irreducible_mod_p():
    assert irreducible_mod_p(ModPoly(3, [1, 0, 1]))
    assert not irreducible_mod_p(ModPoly(5, [1, 0, 1]))


def test_factor_mod_p_multiplies_back():
    f = ModPoly(7, [6, 0, 0, 0, 0, 0, 0, 0, 1])     # x⁸ − 1
    parts = factor_mod_p(f)
    acc = ModPoly(7, [1])
    for g, e in parts:
        for _ in range(e):
            acc = acc * g
    assert acc == f
    assert sorted(g.degree for g, _ in parts) == [1, 1, 2, 2, 2]
    assert all(irreducible_mod_p(g) for g, _ in parts)


@pytest.mark.parametrize(
    "coeffs",
    [
        [-1, 0, 2, 1],                # (x + 1)(x² + x − 1)
        [0, 0, 4, 0, -4],             # −4x²(x − 1)(x + 1)
        [-1, 0, 0, 0, 0, 0, 0, 0, 1], # x⁸ − 1
        [4, 0, -7, 0, 4],             # irreducible quartic
        [1, 2, 1, 0, 0, 3, 9],
    ],
)
def test_factor_over_Z_matches_sympy(coeffs):
    f = IntPoly(coeffs)
    content, factors = factor_over_Z(f)
    assert expand_factorization(content, factors) == f
    _, expected = sympy.factor_list(to_sympy(f).as_expr(), X)
    assert sorted((fac.degree, e) for fac, e in factors) == sorted(
        (sympy.degree(g, X), e) for g, e in expected
    )


def test_factor_over_Z_degree_bound():
    with pytest.raises(UnsupportedSizeError):
        factor_over_Z(IntPoly.monomial(10) + 1, max_degree=8)


@pytest.mark.parametrize("seed", range(8))
def test_factor_over_Z_random_products(seed):
    rng = random.Random(500 + seed)
    f = IntPoly([rng.choice([-3, -2, 2, 3])])
    for _ in range(rng.randint(2, 4)):
        f = f * random_poly(rng, rng.randint(1, 3), bound=5)
    content, factors = factor_over_Z(f)
    assert expand_factorization(content, factors) == f
    for fac, e in factors:
        assert e >= 1
        assert fac.lc > 0
        assert fac.content() == 1
        assert to_sympy(fac).is_irreducible


def test_modpoly_needs_prime_modulus():
    for p in (0, 1, 4, 9, 561):
        with pytest.raises(InvalidInputError):
            ModPoly(p, [1, 1])
    assert ModPoly(2, [1, 1]).degree == 1
