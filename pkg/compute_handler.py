"""
compute_handler.py – settings + shared plumbing for every feature handler

 • Optional TOML settings file (config/settings.toml or $SURGERY_SETTINGS)
 • Sectioned tables, keys looked up through pick() with typed defaults
 • CLI overrides win over the file, the file wins over the defaults
"""
from __future__ import annotations

import logging
import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import Any

import pandas as pd

from errors import InvalidInputError

logger = logging.getLogger(__name__)
if not logger.handlers:
    logger.addHandler(logging.StreamHandler())
logger.setLevel(logging.INFO)

SETTINGS_ENV = "SURGERY_SETTINGS"
DEFAULT_SETTINGS_PATH = Path(__file__).resolve().parent / "config" / "settings.toml"

# first 40 primes: moduli tried by the irreducibility certificates
_IRRED_PRIMES = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
    151, 157, 163, 167, 173,
]

DEFAULTS: dict[str, dict[str, Any]] = {
    "factor": {
        "trial_bound": 1_000_000,
        "rho_budget": 200_000,
        "rho_seed": 20240607,
        "progression_budget": 200_000,
        "ecm_b1": 10_000,
        "ecm_b2": 1_000_000,
        "ecm_curves": 200,
        "ecm_rounds": 3,
    },
    "sequence": {
        "generators": [5, 13],
        "budget": 1_000_000,
        "precision_bits": 128,
        "max_precision_bits": 4096,
    },
    "limits": {
        "zfactor_max_degree": 64,
        "divpoly_max_n": 128,
        "irreducibility_primes": _IRRED_PRIMES,
    },
    "output": {
        "schema_version": "1.0",
    },
}


# ─────────────────────────────────────────────────────────────
# 1. Settings file
# ─────────────────────────────────────────────────────────────
def _settings_path(explicit: str | os.PathLike | None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(SETTINGS_ENV)
    if env:
        return Path(env)
    return DEFAULT_SETTINGS_PATH


def load_settings(path: str | os.PathLike | None = None) -> dict[str, Any]:
    """Read the TOML file; a missing default file means "all defaults"."""
    target = _settings_path(path)
    if not target.exists():
        if path:
            # an explicitly requested file must exist
            raise InvalidInputError(f"settings file not found: {target}")
        return {}
    with target.open("rb") as fh:
        data = tomllib.load(fh)
    logger.debug("settings loaded from %s", target)
    return data


# ─────────────────────────────────────────────────────────────
# 2. ComputeManager
# ─────────────────────────────────────────────────────────────
class ComputeManager:
    """Base for the feature handlers: resolved settings plus DataFrame helpers."""

    # ---------------------------------------------------------
    # constructor
    # ---------------------------------------------------------
    def __init__(
        self,
        settings_path: str | os.PathLike | None = None,
        overrides: dict[str, dict[str, Any]] | None = None,
    ):
        raw = load_settings(settings_path)
        overrides = overrides or {}

        def pick(section: str, *keys, default=None):
            table = raw.get(section, {}) or {}
            over = overrides.get(section, {}) or {}
            for k in keys:
                if over.get(k) is not None:
                    return over[k]
            for k in keys:
                if k in table:
                    return table[k]
                if k.lower() in table:
                    return table[k.lower()]
                if k.upper() in table:
                    return table[k.upper()]
            return default

        self.settings: dict[str, dict[str, Any]] = {}
        for section, keys in DEFAULTS.items():
            self.settings[section] = {
                key: pick(section, key, default=value)
                for key, value in keys.items()
            }

        self._coerce()

    # ---------------------------------------------------------
    # internal utilities
    # ---------------------------------------------------------
    def _coerce(self) -> None:
        f = self.settings["factor"]
        for key in ("trial_bound", "rho_budget", "rho_seed", "progression_budget",
                    "ecm_b1", "ecm_b2", "ecm_curves", "ecm_rounds"):
            f[key] = int(f[key])
        s = self.settings["sequence"]
        s["generators"] = [int(g) for g in s["generators"]]
        for key in ("budget", "precision_bits", "max_precision_bits"):
            s[key] = int(s[key])
        lim = self.settings["limits"]
        lim["zfactor_max_degree"] = int(lim["zfactor_max_degree"])
        lim["divpoly_max_n"] = int(lim["divpoly_max_n"])
        lim["irreducibility_primes"] = [int(p) for p in lim["irreducibility_primes"]]
        self.settings["output"]["schema_version"] = str(
            self.settings["output"]["schema_version"]
        )

    # ---------------------------------------------------------
    # public API
    # ---------------------------------------------------------
    def setting(self, section: str, key: str) -> Any:
        return self.settings[section][key]

    @property
    def factor_options(self) -> dict[str, int]:
        """Keyword arguments understood by core_arith.integers.factor_integer."""
        f = self.settings["factor"]
        return dict(
            trial_bound=f["trial_bound"],
            rho_budget=f["rho_budget"],
            seed=f["rho_seed"],
            progression_budget=f["progression_budget"],
            ecm_b1=f["ecm_b1"],
            ecm_b2=f["ecm_b2"],
            ecm_curves=f["ecm_curves"],
            ecm_rounds=f["ecm_rounds"],
        )

    def effective_config(self) -> dict[str, Any]:
        """Settings echoed into every JSON document."""
        return {section: dict(values) for section, values in self.settings.items()}

    @staticmethod
    def rows_to_df(rows: list[dict[str, Any]], columns: list[str] | None = None) -> pd.DataFrame:
        df = pd.DataFrame(rows)
        if columns is not None:
            df = df.reindex(columns=columns)
        return df

    # ---------------------------------------------------------
    # argument helpers shared by the command pages
    # ---------------------------------------------------------
    @staticmethod
    def parse_int_list(text: str | None) -> list[int]:
        if text is None or not str(text).strip():
            return []
        try:
            return [int(p) for p in str(text).replace(" ", "").split(",") if p]
        except ValueError as exc:
            raise InvalidInputError(f"not an integer list: {text!r}") from exc

    @classmethod
    def odd_values(cls, d: str | None, d_min: int | None, d_max: int | None) -> list[int]:
        """Explicit --d values must all be odd; a --d-min/--d-max range keeps its odd members ≥ 3."""
        if d:
            values = cls.parse_int_list(d)
            bad = [v for v in values if v < 3 or v % 2 == 0]
            if bad:
                raise InvalidInputError(f"d must be odd and ≥ 3: {bad}")
            return values
        if d_min is None or d_max is None:
            raise InvalidInputError("give --d or both --d-min and --d-max")
        values = [v for v in range(max(d_min, 3), d_max + 1) if v % 2 == 1]
        if not values:
            raise InvalidInputError(f"empty odd range [{d_min}, {d_max}]")
        return values

    @staticmethod
    def fan_out(func, items: list, jobs: int = 1) -> list:
        """Apply func to every item; with jobs > 1 a thread pool, results in input order."""
        if jobs <= 1 or len(items) <= 1:
            return [func(x) for x in items]
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(func, items))
