import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

import random
from fractions import Fraction

import pytest
import sympy

from character_variety.curve import curve_eval, sample_curve_points
from core_arith.intpoly import IntPoly
from elliptic_divpoly.checks import (
    TWO_TORSION_CUBIC,
    divisibility_check,
    expected_degree,
    factlist_check,
    newton_polygon,
    two_adic_root_valuations,
)
from elliptic_divpoly.divpoly import divpoly_table
from elliptic_divpoly.divpoly_handler import DivPolyHandler
from elliptic_divpoly.torsion import (
    GaussianInt,
    TorsionKind,
    birational_map,
    gaussian_divpoly_eval,
    intersection_point_audit,
    torsion_obstruction,
    unit_obstruction,
)
from elliptic_divpoly.weierstrass import curve_invariants, default_curve
from errors import InvalidInputError, SingularCurveError, UnsupportedSizeError, VerificationFailure

F4 = [64, 256, 192, -416, -896, -672, -168, 64, 48, 8]


@pytest.fixture(scope="module")
def table():
    return divpoly_table(default_curve(), 64)


# ───────────────────────── curves ─────────────────────────
def test_default_curve_invariants():
    E = default_curve()
    assert (E.b2, E.b4, E.b6, E.b8) == (8, 0, -4, -8)
    assert (E.c4, E.c6, E.disc) == (64, 352, 80)
    assert E.j == Fraction(16384, 5)
    assert E.weierstrass_rhs() == TWO_TORSION_CUBIC


@pytest.mark.parametrize("coeffs, disc", [((0, 0, 0, 0, 1), -432), ((0, 0, 0, -1, 0), 64)])
def test_discriminants(coeffs, disc):
    E = curve_invariants(*coeffs)
    assert E.disc == disc
    assert 4 * E.b8 == E.b2 * E.b6 - E.b4 ** 2


def test_singular_curve():
    with pytest.raises(SingularCurveError):
        curve_invariants(0, 0, 0, 0, 0)


# ───────────────────────── division polynomials ─────────────────────────
def test_printed_list(table):
    assert table[1] == IntPoly([1])
    assert table[2] == IntPoly([-4, 0, 8, 4])
    assert table[3] == IntPoly([-8, -12, 0, 8, 3])
    assert table[4] == IntPoly(F4)
    assert table[2](-1) == 0
    assert table[3](0) == -8


def test_table_bounds(table):
    assert len(table) == 64
    with pytest.raises(InvalidInputError):
        table[65]
    with pytest.raises(InvalidInputError):
        divpoly_table(default_curve(), 0)


def test_torsion_points_on_y2_x3_plus_1():
    t = divpoly_table(curve_invariants(0, 0, 0, 0, 1), 6)
    assert t[2](-1) == 0          # (−1, 0) has order 2
    assert t[3](0) == 0           # (0, ±1) has order 3
    assert t[6](2) == 0           # (2, ±3) has order 6
    assert t[5](2) != 0


@pytest.mark.parametrize("n", range(2, 65))
def test_factlist(table, n):
    report = factlist_check(table, n)
    assert report["degree"] == expected_degree(n)
    assert report["lc"] == (2 * n if n % 2 == 0 else n)


@pytest.mark.parametrize("n", range(2, 65, 2))
def test_f2_divides_even(table, n):
    assert divisibility_check(table, n)


def test_factlist_failure_names_clause():
    bad = divpoly_table(default_curve(), 4)
    broken = type(bad)(bad.curve, 4, bad.polys[:3] + (bad.polys[3] + IntPoly([2]),))
    with pytest.raises(VerificationFailure) as exc:
        factlist_check(broken, 4)
    assert exc.value.clause == "even-2-power"
    assert exc.value.index == 0


def test_factlist_needs_default_curve():
    other = divpoly_table(curve_invariants(0, 0, 0, -1, 0), 4)
    with pytest.raises(InvalidInputError):
        factlist_check(other, 3)


def test_newton_polygon():
    assert newton_polygon(IntPoly([4, 0, 1]), 2) == [(Fraction(1), 2)]
    assert newton_polygon(IntPoly([0, 0, 1, 1]), 2) == [(None, 2), (Fraction(0), 1)]


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 9])
def test_two_adic_valuations_positive(table, n):
    assert all(s > 0 for s, _ in two_adic_root_valuations(table, n) if s is not None)


# ───────────────────────── torsion ─────────────────────────
def test_gaussian_evaluation(table):
    assert gaussian_divpoly_eval(table, 2, GaussianInt(1, 1)) == GaussianInt(-12, 24)
    assert GaussianInt(1, 1) * GaussianInt(1, -1) == GaussianInt(2)
    assert str(GaussianInt(-12, 24)) == "-12+24i"


def test_intersection_audit(table):
    audit = intersection_point_audit(6, table)
    assert len(audit["evaluations"]) == 10
    assert all(row["value"] for row in audit["evaluations"])


def test_birational_map():
    assert birational_map(3, 2) == (3, 6)


# ───────────────────────── random curves ─────────────────────────
PRIME = 10007


def _ec_add(E, P, Q):
    """Group law on y² + a1xy + a3y = x³ + a2x² + a4x + a6 over F_PRIME; None is the origin."""
    if P is None:
        return Q
    if Q is None:
        return P
    a1, a2, a3, a4, a6 = E.coeffs
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2 + a1 * x2 + a3) % PRIME == 0:
        return None
    if x1 == x2:
        num = 3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1
        den = 2 * y1 + a1 * x1 + a3
    else:
        num, den = y2 - y1, x2 - x1
    lam = num * pow(den, -1, PRIME) % PRIME
    x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % PRIME
    y3 = (lam * (x1 - x3) - y1 - a1 * x3 - a3) % PRIME
    return x3, y3


def _random_curve_and_point(rng):
    while True:
        coeffs = [rng.randint(-5, 5) for _ in range(5)]
        try:
            E = curve_invariants(*coeffs)
        except SingularCurveError:
            continue
        if E.disc % PRIME == 0:
            continue
        a1, a2, a3, a4, a6 = coeffs
        for _ in range(50):
            x = rng.randrange(PRIME)
            # (2y + a1x + a3)² = 4x³ + b2x² + 2b4x + b6
            rhs = (4 * x**3 + E.b2 * x * x + 2 * E.b4 * x + E.b6) % PRIME
            roots = sympy.sqrt_mod(rhs, PRIME, all_roots=True)
            nonzero = [s for s in roots if s]
            if nonzero:
                y = (nonzero[0] - a1 * x - a3) * pow(2, -1, PRIME) % PRIME
                return E, (x, y)


@pytest.mark.parametrize("seed", range(5))
def test_division_polynomials_on_random_curves(seed):
    N = 24
    E, P = _random_curve_and_point(random.Random(seed))
    t = divpoly_table(E, N)
    for n in range(2, N + 1):
        assert t[n].degree == expected_degree(n)
        assert t[n].lc == (2 * n if n % 2 == 0 else n)
        if n % 2 == 0:
            assert t[2].divides(t[n])

    x0 = P[0]
    f = [None] + [t[n](x0) % PRIME for n in range(1, N + 1)]
    assert f[2] != 0
    multiple = P
    for n in range(2, N):
        multiple = _ec_add(E, multiple, P)        # nP
        if multiple is None:
            assert f[n] == 0
            break
        assert f[n] != 0
        # x(nP) = x − ψ_(n−1)ψ_(n+1)/ψ_n², written with f_n = ψ_n (odd n) or ψ_nψ_2 (even n)
        if n % 2:
            num, den = f[n - 1] * f[n + 1], f[2] * f[n] * f[n]
        else:
            num, den = f[2] * f[n - 1] * f[n + 1], f[n] * f[n]
        assert multiple[0] == (x0 - num * pow(den, -1, PRIME)) % PRIME


def test_birational_map_lands_on_the_weierstrass_curve():
    rhs = default_curve().weierstrass_rhs()
    for R, Z in sample_curve_points(100, seed=11):
        x, y = birational_map(R, Z)
        assert abs(curve_eval(R, Z)) < 1e-8
        assert abs(y * y - rhs(x)) < 1e-8 * max(1.0, abs(x) ** 3)

    rng = random.Random(4)
    for _ in range(100):
        R = sympy.Rational(rng.choice([-1, 1]) * rng.randint(1, 40), rng.randint(1, 9))
        Z = sympy.sqrt((R**3 + 2 * R**2 - 1) / R**2)
        assert sympy.simplify(curve_eval(R, Z)) == 0
        x, y = birational_map(R, Z)
        assert sympy.expand(y**2 - rhs(x)) == 0
        assert sympy.simplify(y / x - Z) == 0


@pytest.mark.parametrize(
    "coeffs, kind",
    [
        ([1, 1], TorsionKind.TWO_TORSION_CANDIDATE),
        ([-1, 1, 1], TorsionKind.TWO_TORSION_CANDIDATE),
        ([-3, 0, 1], TorsionKind.NOT_TORSION),
        ([-2, 0, 1], TorsionKind.INCONCLUSIVE),
    ],
)
def test_torsion_obstruction(coeffs, kind):
    assert torsion_obstruction(IntPoly(coeffs)).kind is kind


def test_torsion_obstruction_rejects_non_monic():
    with pytest.raises(InvalidInputError):
        torsion_obstruction(IntPoly([1, 2]))


def test_unit_obstruction():
    assert unit_obstruction(IntPoly([-1, 0, 1, 1])).kind is TorsionKind.NOT_TORSION       # Z² = 1
    assert unit_obstruction(IntPoly([-1, 0, -2, 1])).kind is TorsionKind.NOT_TORSION      # Z² = 4
    assert unit_obstruction(IntPoly([-1, 0, 2, 1])).kind is TorsionKind.TWO_TORSION_CANDIDATE
    assert unit_obstruction(IntPoly([-1, 0, 1, 1]), z_integral=False).kind is TorsionKind.INCONCLUSIVE
    with pytest.raises(InvalidInputError):
        unit_obstruction(IntPoly([2, 0, 1]))


@pytest.mark.parametrize(
    "coeffs",
    [
        [1, 1],           # R + 1 divides the cubic at Z = 0 but ends in +1
        [1, 0, 1, 1],     # constant +1
        [-1, 1, 1],       # quadratic factor of the cubic at Z = 0
        [-1, 3, 1, 1],    # linear term the curve relation never produces
        [-1, 0, 2, 2],    # not monic
    ],
)
def test_unit_obstruction_needs_the_attested_cubic(coeffs):
    with pytest.raises(InvalidInputError):
        unit_obstruction(IntPoly(coeffs))


# ───────────────────────── handler ─────────────────────────
def test_divpoly_handler():
    dh = DivPolyHandler()
    t = dh.table(8)
    assert dh.table(6) is t
    frame = dh.coefficient_frame(t, 4)
    assert frame["degree"].tolist() == [0, 3, 4, 9]
    assert frame.loc[3, "coefficients"] == F4
    assert dh.divisibility_table(8)["f2_divides"].all()
    assert dh.valuation_table(6)["all_positive"].all()
    assert dh.torsion_verdict("1,1").kind is TorsionKind.TWO_TORSION_CANDIDATE
    with pytest.raises(UnsupportedSizeError):
        dh.table(500)
