import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

from fractions import Fraction

import pytest

from character_variety.curve import (
    CurvePoint,
    curve_eval,
    hilbert_symbol_entries,
    point_to_representation,
    sample_curve_points,
    verify_representation,
)
from character_variety.house import (
    CUBIC_BOUND,
    cms_exclusion,
    conjugate_maximum,
    discriminant_jump,
    house_bound_check,
    largest_real_root,
    rootplot_frame,
)
from character_variety.surgery import (
    constant_term_matches_norm,
    irreducibility_certificate,
    norm_cubic,
    printed_factorization_remark,
    surgery_cubic,
)
from character_variety.symbols import (
    condition_star,
    local_split_criterion,
    minus_one_square_in_field,
    quadratic_field_square_test,
    squarefree_class,
    tame_symbol,
)
from character_variety.variety_handler import VarietyHandler
from core_arith.intpoly import IntPoly
from errors import InvalidInputError, UnsupportedSizeError


# ───────────────────────── curve points ─────────────────────────
@pytest.mark.parametrize(
    "R, Z, value",
    [
        (0, 0, -1),
        (-1, 0, 0),
        (1, 1, 1),
        (3, 2, 8),
        (Fraction(1, 2), 1, Fraction(-5, 8)),
    ],
)
def test_curve_eval(R, Z, value):
    assert curve_eval(R, Z) == value
    assert curve_eval(R, -Z) == value


def test_curve_eval_at_R_equal_2():
    # 15 − 4Z² at R = 2, so the curve needs Z² = 15/4
    assert curve_eval(2, 1) == 11
    assert curve_eval(2, Fraction(1, 2)) == 14
    pt = CurvePoint.from_square(2, Fraction(15, 4))
    assert pt.residual() == 0


def test_exact_point_and_hilbert_entries():
    pt = CurvePoint.from_square(3, Fraction(44, 9))
    assert pt.exact
    assert pt.r == -1
    entries = hilbert_symbol_entries(pt)
    assert entries.r_form == (8, 1)
    assert entries.intermediate_form == (8, 1)
    assert entries.trace_form == (Fraction(8, 9), 1)
    assert not entries.degenerate


def test_reducible_locus_is_degenerate():
    pt = CurvePoint.from_square(2, Fraction(15, 4))
    assert hilbert_symbol_entries(pt).degenerate


def test_point_off_curve_rejected():
    with pytest.raises(InvalidInputError):
        CurvePoint(1, 0)
    with pytest.raises(InvalidInputError):
        CurvePoint(1.0, 0.1)


def test_representation_on_curve():
    for R, Z in sample_curve_points(25, seed=3):
        x, r = point_to_representation(R, Z)
        assert verify_representation(x, r) < 1e-8


def test_representation_off_curve():
    x, r = point_to_representation(-3.0, 2.5)
    assert verify_representation(x, r) > 1e-3


# ───────────────────────── surgery cubics ─────────────────────────
def test_norm_cubics():
    assert norm_cubic(3) == IntPoly([-1, 0, 1, 1])
    assert norm_cubic(5) == IntPoly([1, 0, -1, -2, -1, 1, 1])


@pytest.mark.parametrize("d", [3, 5, 7, 9, 11, 13, 21])
def test_norm_cubic_shape(d):
    F = norm_cubic(d)
    m = surgery_cubic(d).psi.degree
    assert F.degree == 3 * m
    assert F.is_monic()
    assert F.coeffs[0] == (-1) ** m


def test_q3_specialization():
    assert surgery_cubic(3).specialize(-1, "q") == [11, 16, 7, 1]


def test_constant_norm():
    assert surgery_cubic(3).constant_norm == 11
    assert surgery_cubic(5).constant_norm == 61
    assert all(constant_term_matches_norm(d) for d in range(3, 42, 2))


@pytest.mark.parametrize("d", range(3, 42, 2))
def test_irreducibility_certificates(d):
    rep = irreducibility_certificate(d)
    assert rep.irreducible


def test_irreducibility_domain():
    with pytest.raises(InvalidInputError):
        irreducibility_certificate(4)
    with pytest.raises(UnsupportedSizeError):
        irreducibility_certificate(43)


def test_even_remarks():
    p4 = printed_factorization_remark(4)
    assert p4["factors"] == [IntPoly([1, 1]), IntPoly([-1, 1, 1])]
    assert not p4["printed_matches"]
    p8 = printed_factorization_remark(8)
    assert p8["p"] == IntPoly([-1, 0, 0, 1])
    assert p8["printed_matches"]


# ───────────────────────── house bound ─────────────────────────
def test_largest_real_root_values():
    assert abs(largest_real_root(2) - 2.20556943040059) < 1e-9
    assert abs(largest_real_root(0) - 1) < 1e-12
    with pytest.raises(InvalidInputError):
        largest_real_root(2.5)


def test_discriminant_jump():
    a_star = discriminant_jump()
    assert abs(a_star + 1.88988) < 1e-5
    assert largest_real_root(a_star - 0.01) > largest_real_root(a_star + 0.01) + 0.1


def test_rootplot_window():
    df = rootplot_frame(-2, 2, 400)
    assert (df["root"] < CUBIC_BOUND).all()
    tail = rootplot_frame(-1.8, 2, 200)["root"]
    assert tail.is_monotonic_increasing
    with pytest.raises(InvalidInputError):
        rootplot_frame(-3, 2, 10)
    with pytest.raises(InvalidInputError):
        rootplot_frame(-1, 1, 1)


def test_d43_is_below_the_floor():
    _, a, root = conjugate_maximum(43)
    assert abs(root - 2.18763964834393) < 1e-9
    assert not house_bound_check(43)
    assert cms_exclusion(43)


@pytest.mark.parametrize("d", range(45, 102, 2))
def test_house_bound(d):
    assert house_bound_check(d)


# ───────────────────────── symbols ─────────────────────────
def test_squarefree_class():
    assert squarefree_class(12) == 3
    assert squarefree_class(Fraction(-1, 4)) == -1
    assert squarefree_class(Fraction(8, 9)) == 2


def test_tame_symbol_at_R2():
    sym = tame_symbol(0, 1, Fraction(-1, 4), 1, quadratic_field_square_test(15))
    assert sym.value == -4
    assert sym.square_class == -1
    assert not sym.trivial


def test_quadratic_field_square_test():
    test = quadratic_field_square_test(15)
    assert test(15)
    assert test(Fraction(15, 4))
    assert not test(-1)
    with pytest.raises(InvalidInputError):
        quadratic_field_square_test(9)


@pytest.mark.parametrize("p, f, expected", [(7, 1, "ramified"), (7, 2, "split"), (5, 1, "split"), (3, 3, "ramified")])
def test_local_split_criterion(p, f, expected):
    assert local_split_criterion(p, f) == expected
    assert minus_one_square_in_field(p, f) == (expected == "split")


def test_local_split_criterion_follows_euler_criterion():
    for p in range(3, 200, 2):
        if any(p % q == 0 for q in range(3, p, 2)):
            continue
        minus_one_is_square = pow(p - 1, (p - 1) // 2, p) == 1
        for f in range(1, 5):
            expected = "split" if minus_one_is_square or f % 2 == 0 else "ramified"
            assert local_split_criterion(p, f) == expected


def test_local_split_criterion_dyadic():
    with pytest.raises(UnsupportedSizeError):
        local_split_criterion(2, 1)


def test_condition_star_fails_for_4_7_4():
    rep = condition_star(IntPoly([4, -7, 4]))
    assert not rep.holds
    assert rep.verdict == "fails"
    assert (4, 2) in [(p.w_degree, p.trace_degree) for p in rep.pairs]


@pytest.mark.parametrize("coeffs", ["-1,1", "1,-3,1"])
def test_condition_star_holds(coeffs):
    assert condition_star(IntPoly.from_string(coeffs)).holds


def test_condition_star_rejects_zero():
    with pytest.raises(InvalidInputError):
        condition_star(IntPoly())


# ───────────────────────── handler ─────────────────────────
def test_variety_handler_tables():
    vh = VarietyHandler()
    df = vh.irreducibility_table([3, 5, 7], jobs=2)
    assert df["d"].tolist() == [3, 5, 7]
    assert (df["verdict"] == "irreducible").all()
    assert vh.root_window_ok()
    local = vh.local_criterion_table(p_max=30, f_max=3)
    assert (local["rule"] == local["explicit"]).all()
    assert (vh.representation_table(count=10)["residual"] < 1e-8).all()
    assert vh.house_range(43, 49) == [43, 45, 47, 49]
