"""
export_utils.py – JSON / CSV writers used by every command

 • JSON documents: {"schema_version", "command", "config", "results"}, sorted keys
 • integers with |n| ≥ 2^53 become decimal strings, Fractions become "p/q"
 • CSV goes through DataFrame.to_csv(index=False)
"""
from __future__ import annotations

import dataclasses
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np
import pandas as pd

from core_arith.intpoly import IntPoly

SAFE_INT = 2 ** 53


def to_jsonable(obj: Any) -> Any:
    """Recursively convert toolkit values into plain JSON types."""
    if obj is None:
        return None
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        n = int(obj)
        return str(n) if abs(n) >= SAFE_INT else n
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}" if obj.denominator != 1 else to_jsonable(obj.numerator)
    if isinstance(obj, complex):
        return {"re": obj.real, "im": obj.imag}
    if isinstance(obj, IntPoly):
        return [to_jsonable(c) for c in obj.coeffs]
    if isinstance(obj, pd.DataFrame):
        return [to_jsonable(r) for r in obj.to_dict(orient="records")]
    if hasattr(obj, "as_dict"):
        return to_jsonable(obj.as_dict())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    if hasattr(obj, "value") and hasattr(obj, "name"):     # enums
        return obj.value
    return str(obj)


def build_document(command: str, config: dict[str, Any], results: Any, schema_version: str) -> dict:
    return {
        "schema_version": schema_version,
        "command": command,
        "config": to_jsonable(config),
        "results": to_jsonable(results),
    }


def dumps_document(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def csv_text(df: pd.DataFrame) -> str:
    """Plain CSV: header row, '.' decimals, lists rendered as ';'-joined text."""
    out = df.copy()
    for col in out.columns:
        out[col] = out[col].map(
            lambda v: ";".join(str(x) for x in v) if isinstance(v, (list, tuple)) else v
        )
    return out.to_csv(index=False, lineterminator="\n")


def emit(text: str, out: str | Path | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def publish(
    command: str,
    config: dict[str, Any],
    results: Any,
    *,
    fmt: str = "json",
    out: str | Path | None = None,
    schema_version: str = "1.0",
    frame: pd.DataFrame | None = None,
) -> None:
    """Write one command's output as a JSON document or, for tables, as CSV."""
    if fmt == "csv":
        table = frame if frame is not None else pd.DataFrame(to_jsonable(results))
        emit(csv_text(table), out)
    else:
        emit(dumps_document(build_document(command, config, results, schema_version)), out)
