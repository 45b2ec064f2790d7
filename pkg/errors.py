"""
errors.py – exception hierarchy shared by every package

Each class carries the process exit code the CLI returns for it:
  0 success · 1 verification failure · 2 invalid input · 3 budget exhausted
"""
from __future__ import annotations


class ToolkitError(Exception):
    """Base class; anything raised on purpose by the toolkit derives from it."""

    exit_code = 1


# ───────────────────────── input problems (exit 2) ─────────────────────────
class InvalidInputError(ToolkitError, ValueError):
    exit_code = 2


class UnsupportedSizeError(InvalidInputError):
    """Input is well formed but outside the range the toolkit handles."""


class SingularCurveError(InvalidInputError):
    """Weierstrass coefficients with vanishing discriminant."""


# ───────────────────────── arithmetic / checks (exit 1) ─────────────────────
class ConsistencyError(ToolkitError, ArithmeticError):
    """An exact identity that must hold did not (signals an arithmetic bug)."""


class VerificationFailure(ToolkitError, AssertionError):
    """A verified statement failed; `clause` and `index` locate the failure."""

    def __init__(self, clause: str, index: int | None = None, detail: str = ""):
        self.clause = clause
        self.index = index
        self.detail = detail
        where = f" at index {index}" if index is not None else ""
        msg = f"{clause} failed{where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# ───────────────────────── budgets (exit 3) ─────────────────────────
class BudgetExceededError(ToolkitError, RuntimeError):
    exit_code = 3

    def __init__(self, budget: str, value: int, detail: str = ""):
        self.budget = budget
        self.value = value
        msg = f"budget '{budget}' exhausted after {value}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)
