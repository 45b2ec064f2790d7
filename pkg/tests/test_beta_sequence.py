import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

import cmath
import math

import pytest

from beta_sequence.angles import angle_prescreen, prescreen_sign
from beta_sequence.quartic import (
    BETA,
    abs_identity_audit,
    gamma_minimal_polynomial_audit,
    parity_grading_holds,
    product_identity_audit,
    quartic_pow,
    resultant_identity_audit,
    s_of_n,
    s_residue_audit,
    s_sign,
)
from beta_sequence.sequence import (
    RamificationCertificate,
    build_n_sequence,
    eligible_divisor,
    extract_d_sequence,
    primes_union,
    semigroup_elements,
    validate_generators,
)
from beta_sequence.sequence_handler import SequenceHandler
from core_arith.integers import Factorization
from errors import InvalidInputError


@pytest.mark.parametrize(
    "n, s",
    [(1, 1), (3, 11), (5, 61), (7, 251), (9, 781), (11, 1451), (13, -2339), (15, -39589)],
)
def test_s_values(n, s):
    assert s_of_n(n) == s


@pytest.mark.parametrize("n", [1, 3, 5, 21, 47, 99])
def test_s_matches_floating_definition(n):
    beta = (1j + math.sqrt(15)) / 4
    approx = 2 ** (n + 1) * (beta ** n).imag
    assert abs(approx - s_of_n(n)) < 1e-6 * max(1, abs(s_of_n(n)))


def test_beta_has_unit_modulus():
    assert abs(abs(BETA.to_complex()) - 1) < 1e-12
    assert abs(cmath.phase(BETA.to_complex()) - math.asin(0.25)) < 1e-12


def test_quartic_pow_agrees_with_integer_route():
    for n in (1, 3, 9):
        assert quartic_pow(BETA, n).b * 2 ** (n + 1) == s_of_n(n)


@pytest.mark.parametrize("n", [0, 2, -1])
def test_s_rejects_even_or_nonpositive(n):
    with pytest.raises(InvalidInputError):
        s_of_n(n)


def test_residues_up_to_1001():
    assert all(s_residue_audit(n) for n in range(1, 1002, 2))


@pytest.mark.parametrize("n", range(1, 106, 2))
def test_abs_identity(n):
    assert abs_identity_audit(n)


@pytest.mark.parametrize("n", range(5, 106, 4))
def test_signed_identity(n):
    assert product_identity_audit(n)


def test_signed_identity_domain():
    with pytest.raises(InvalidInputError):
        product_identity_audit(3)


def test_resultant_identity_and_gamma():
    assert all(resultant_identity_audit(n) for n in range(1, 40, 2))
    assert gamma_minimal_polynomial_audit()
    assert all(parity_grading_holds(n) for n in range(30))


# ───────────────────────── angles ─────────────────────────
@pytest.mark.parametrize("n", [1, 3, 13, 15, 325, 4225])
def test_prescreen_agrees_with_exact_sign(n):
    guess = prescreen_sign(n, 128, 4096)
    assert guess is None or guess == s_sign(n)


def test_angle_interval_is_tight():
    est = angle_prescreen(4225, 128)
    assert est.hi - est.lo < 2 ** -60


def test_angle_precision_floor():
    with pytest.raises(InvalidInputError):
        angle_prescreen(3, 32)


# ───────────────────────── sequence ─────────────────────────
def test_semigroup_elements():
    assert semigroup_elements((5, 13), 130) == [5, 13, 25, 65, 125]


@pytest.mark.parametrize("gens", [[5], [3, 5], [5, 9], [5, 5]])
def test_validate_generators_rejects(gens):
    with pytest.raises(InvalidInputError):
        validate_generators(gens)


def test_build_n_sequence():
    seq = build_n_sequence([5, 13], 3)
    assert [n for n, _ in seq.entries] == [13, 325, 4225]
    assert [s for _, s in seq.entries] == [-1, 1, -1]
    assert s_sign(325) == 1


def test_eligible_divisor():
    assert eligible_divisor(13, None) == 13
    assert eligible_divisor(325, 13) == 325


def test_first_certificate_is_2339():
    seq = build_n_sequence([5, 13], 1)
    (cert,) = extract_d_sequence(seq)
    assert cert.d == 13
    assert cert.norm == -2339
    assert cert.primes == (2339,)
    assert cert.certified
    assert cert.factorization.complete
    assert primes_union([cert]) == [2339]


def test_incomplete_factorization_is_not_certified():
    cofactor = (2**61 - 1) * (2**89 - 1)
    cert = RamificationCertificate(
        index=2,
        d=325,
        norm=-cofactor,
        factorization=Factorization(-1, (), cofactor),
        primes=(),
    )
    assert not cert.certified
    assert cert.as_dict()["certified"] is False
    assert "witness" not in cert.as_dict()


def test_second_certificate_adds_a_new_prime():
    certs = extract_d_sequence(build_n_sequence([5, 13], 2))
    assert [c.d for c in certs] == [13, 325]
    second = certs[1]
    assert second.certified
    assert 99618438099008600108999 in second.primes
    union = primes_union(certs)
    assert len(union) >= 2
    assert 2339 in union


def test_handler_tables():
    sh = SequenceHandler()
    s = sh.s_table(15)
    assert s["s"].tolist() == [1, 11, 61, 251, 781, 1451, -2339, -39589]
    assert s["residue_ok"].all()
    ident = sh.identity_table(15)
    assert ident["abs_ok"].all()
    scan = sh.sign_scan(31)
    assert (scan["float_sign"] == scan["exact_sign"]).all()
