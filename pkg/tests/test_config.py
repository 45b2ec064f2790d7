import sys
from pathlib import Path
sys.path.append(str(Path(__file__).resolve().parents[1]))

import json
from fractions import Fraction

import pandas as pd
import pytest

from compute_handler import SETTINGS_ENV, ComputeManager
from core_arith.intpoly import IntPoly
from errors import InvalidInputError
from export_utils import build_document, csv_text, dumps_document, to_jsonable


# ───────────────────────── settings ─────────────────────────
def test_defaults_without_file(tmp_path, monkeypatch):
    monkeypatch.setenv(SETTINGS_ENV, str(tmp_path / "absent.toml"))
    cm = ComputeManager()
    assert cm.setting("factor", "trial_bound") == 1_000_000
    assert cm.setting("factor", "ecm_rounds") == 3
    assert cm.setting("sequence", "generators") == [5, 13]
    assert cm.setting("limits", "irreducibility_primes")[:3] == [2, 3, 5]
    assert len(cm.setting("limits", "irreducibility_primes")) == 40
    assert cm.setting("output", "schema_version") == "1.0"


def test_settings_file_and_overrides(tmp_path):
    path = tmp_path / "settings.toml"
    path.write_text('[factor]\nTRIAL_BOUND = 5000\n\n[sequence]\ngenerators = [5, 17]\n', encoding="utf-8")
    cm = ComputeManager(path)
    assert cm.setting("factor", "trial_bound") == 5000
    assert cm.setting("sequence", "generators") == [5, 17]
    assert cm.factor_options["trial_bound"] == 5000

    cm = ComputeManager(path, overrides={"factor": {"trial_bound": 77}})
    assert cm.setting("factor", "trial_bound") == 77
    assert cm.effective_config()["factor"]["rho_seed"] == 20240607


def test_ecm_settings_reach_factor_options(tmp_path):
    path = tmp_path / "ecm.toml"
    path.write_text("[factor]\necm_rounds = 1\necm_b1 = 2000\n", encoding="utf-8")
    cm = ComputeManager(path)
    opts = cm.factor_options
    assert opts["ecm_rounds"] == 1
    assert opts["ecm_b1"] == 2000
    assert opts["ecm_b2"] == 1_000_000
    assert opts["ecm_curves"] == 200


def test_settings_from_environment(tmp_path, monkeypatch):
    path = tmp_path / "env.toml"
    path.write_text("[limits]\ndivpoly_max_n = 32\n", encoding="utf-8")
    monkeypatch.setenv(SETTINGS_ENV, str(path))
    assert ComputeManager().setting("limits", "divpoly_max_n") == 32


def test_missing_explicit_settings_file(tmp_path):
    with pytest.raises(InvalidInputError):
        ComputeManager(tmp_path / "nope.toml")


# ───────────────────────── argument helpers ─────────────────────────
def test_parse_int_list():
    assert ComputeManager.parse_int_list("5, 13") == [5, 13]
    assert ComputeManager.parse_int_list(None) == []
    with pytest.raises(InvalidInputError):
        ComputeManager.parse_int_list("5,x")


def test_odd_values():
    assert ComputeManager.odd_values("3,5", None, None) == [3, 5]
    assert ComputeManager.odd_values(None, 1, 9) == [3, 5, 7, 9]
    with pytest.raises(InvalidInputError):
        ComputeManager.odd_values("3,4", None, None)
    with pytest.raises(InvalidInputError):
        ComputeManager.odd_values(None, 3, None)


def test_fan_out_keeps_input_order():
    items = list(range(20))
    assert ComputeManager.fan_out(lambda v: v * v, items, jobs=4) == [v * v for v in items]


# ───────────────────────── export ─────────────────────────
def test_to_jsonable():
    big = 2 ** 60
    assert to_jsonable(big) == str(big)
    assert to_jsonable(-5) == -5
    assert to_jsonable(Fraction(16384, 5)) == "16384/5"
    assert to_jsonable(Fraction(4, 2)) == 2
    assert to_jsonable(IntPoly([1, 0, -1])) == [1, 0, -1]
    assert to_jsonable({3, 1}) == [1, 3]
    assert to_jsonable(1 + 2j) == {"re": 1.0, "im": 2.0}


def test_document_shape():
    doc = build_document("norms", {"d": [3]}, pd.DataFrame([{"d": 3, "ok": True}]), "1.0")
    text = dumps_document(doc)
    assert json.loads(text) == {
        "schema_version": "1.0",
        "command": "norms",
        "config": {"d": [3]},
        "results": [{"d": 3, "ok": True}],
    }
    assert text.index('"command"') < text.index('"config"') < text.index('"results"')


def test_csv_text_joins_lists():
    text = csv_text(pd.DataFrame([{"d": 3, "primes": [11]}, {"d": 7, "primes": [251, 3]}]))
    assert text == "d,primes\n3,11\n7,251;3\n"
