import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

import json

import pytest

import app
from errors import VerificationFailure
from reports.report_handler import VerifyHandler


def run(capsys, *argv):
    code = app.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def results(out):
    doc = json.loads(out)
    assert set(doc) == {"schema_version", "command", "config", "results"}
    return doc["results"]


# ───────────────────────── norms / ramified ─────────────────────────
def test_norms_d3(capsys):
    code, out = run(capsys, "norms", "--d", "3")
    assert code == 0
    (row,) = results(out)
    assert (row["d"], row["norm"], row["abs_mod4"], row["ramified_primes"]) == (3, -11, 3, [11])


def test_norms_d5(capsys):
    code, out = run(capsys, "norms", "--d", "5")
    (row,) = results(out)
    assert (row["norm"], row["abs_mod4"], row["ramified_primes"]) == (61, 1, [])


@pytest.mark.parametrize("argv", [["norms", "--d", "4"], ["norms"], ["norms", "--d-min", "8", "--d-max", "8"], ["bogus"]])
def test_invalid_input_exit_2(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == 2


def test_norms_csv_and_jobs(capsys):
    code, out = run(capsys, "--jobs", "2", "norms", "--d-min", "3", "--d-max", "9", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("d,norm,abs_mod4")
    assert [line.split(",")[0] for line in lines[1:]] == ["3", "5", "7", "9"]


def test_ramified(capsys):
    code, out = run(capsys, "ramified", "--d-min", "3", "--d-max", "7", "--jobs", "2")
    assert code == 0
    assert [row["d"] for row in results(out)] == [3, 7]


def test_output_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert app.main(["norms", "--d", "3,5,13", "--out", str(a)]) == 0
    assert app.main(["norms", "--d", "3,5,13", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


# ───────────────────────── sequence ─────────────────────────
@pytest.mark.parametrize("gens", ["5", "3,5"])
def test_sequence_rejects_generators(capsys, gens):
    code, _ = run(capsys, "sequence", "--gens", gens, "--count", "1")
    assert code == 2


def test_sequence_first_certificate(capsys):
    code, out = run(capsys, "sequence", "--gens", "5,13", "--count", "1")
    assert code == 0
    res = results(out)
    assert res["primes_union"] == [2339]
    assert res["certificates"][0]["d"] == 13


def test_sequence_three_certificates(capsys):
    code, out = run(capsys, "sequence", "--gens", "5,13", "--count", "3")
    assert code == 0
    res = results(out)
    assert [c["d"] for c in res["certificates"]][:2] == [13, 325]
    assert res["all_certified"]
    assert all(c["factorization"]["cofactor"] == 1 for c in res["certificates"])
    assert len(res["primes_union"]) >= 2
    assert 2339 in res["primes_union"]


# ───────────────────────── variety ─────────────────────────
def test_rootplot_csv(capsys):
    code, out = run(capsys, "rootplot", "--a-min", "0", "--a-max", "2", "--steps", "3", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()[1:]]
    assert float(rows[0][1]) == pytest.approx(1.0)
    assert float(rows[-1][1]) == pytest.approx(2.20556943040059, abs=1e-9)


def test_rootplot_out_of_range(capsys):
    code, _ = run(capsys, "rootplot", "--a-min", "-3")
    assert code == 2


def test_irreducible_small_range(capsys):
    code, out = run(capsys, "irreducible", "--d", "3,5")
    assert code == 0
    res = results(out)
    assert [c["verdict"] for c in res["certificates"]] == ["irreducible", "irreducible"]
    assert {r["d"] for r in res["even_remarks"]} == {4, 8}


def test_condition_star(capsys):
    code, out = run(capsys, "condition-star", "4,-7,4")
    assert code == 0
    assert results(out)["verdict"] == "fails"


# ───────────────────────── divpoly / torsion ─────────────────────────
def test_divpoly_json(capsys):
    code, out = run(capsys, "divpoly", "--max-n", "4")
    assert code == 0
    res = results(out)
    assert res["curve"]["disc"] == 80
    assert res["f"][3]["coefficients"] == [64, 256, 192, -416, -896, -672, -168, 64, 48, 8]


def test_divpoly_singular_curve(capsys):
    code, _ = run(capsys, "divpoly", "--curve", "0,0,0,0,0")
    assert code == 2


def test_torsion_check(capsys):
    code, out = run(capsys, "torsion-check", "0,1")
    assert code == 0
    assert results(out)["kind"] == "inconclusive"
    code, out = run(capsys, "torsion-check", "--", "-3,0,1")
    assert results(out)["kind"] == "not-torsion"


# ───────────────────────── verify ─────────────────────────
@pytest.mark.parametrize("suite, bound", [("factlist", "16"), ("residues", "101"), ("identity", "25"), ("divisibility", "20")])
def test_verify_suites_pass(capsys, suite, bound):
    code, out = run(capsys, "verify", suite, "--max-n", bound)
    assert code == 0
    res = results(out)
    assert res["passed"]
    assert suite in res["suites"]


@pytest.mark.parametrize(
    "suite, bound, key",
    [
        ("norms", "45", "recurrence_checked"),
        ("irreducible", "11", "checked"),
        ("house", "61", "checked"),
        ("audit", "6", None),
    ],
)
def test_verify_number_theory_suites_pass(capsys, suite, bound, key):
    code, out = run(capsys, "verify", suite, "--max-n", bound)
    assert code == 0
    res = results(out)
    assert res["passed"]
    if key:
        assert res["suites"][suite][key] > 0


def test_verify_sequence_needs_two_primes(capsys):
    code, out = run(capsys, "verify", "sequence", "--max-n", "3")
    assert code == 0
    payload = results(out)["suites"]["sequence"]
    assert len(payload["primes_union"]) >= 2
    assert payload["all_certified"]


def test_verify_reports_first_failing_clause(capsys, monkeypatch):
    def broken(self, bound, jobs=1):
        raise VerificationFailure("s-residue", 7, "forced")

    monkeypatch.setattr(VerifyHandler, "verify_residues", broken)
    code, out = run(capsys, "verify", "residues")
    assert code == 1
    res = results(out)
    assert res == {"passed": False, "clause": "s-residue", "index": 7, "detail": "forced"}


def test_verify_unknown_suite(capsys):
    code, _ = run(capsys, "verify", "everything")
    assert code == 2
