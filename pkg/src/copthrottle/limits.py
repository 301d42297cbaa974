"""Size guard shared by the exact solvers.

The budget counts game states (and successor entries) for the game solver;
exhaustive subset searches may enumerate up to ``SUBSET_FACTOR`` times as many
candidate subsets.  The default comes from ``COPTHROTTLE_BUDGET`` (5e7).
"""
from __future__ import annotations

import os
from math import comb

DEFAULT_BUDGET = int(float(os.environ.get("COPTHROTTLE_BUDGET", "5e7")))
SUBSET_FACTOR = 20
_budget = {"states": DEFAULT_BUDGET}


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int, what: str = "game states"):
        super().__init__(f"instance needs {needed} {what}, budget is {budget}")
        self.needed = needed
        self.budget = budget


def set_budget(states: int) -> None:
    _budget["states"] = int(states)


def get_budget() -> int:
    return _budget["states"]


def check_budget(needed: int, what: str = "game states") -> None:
    if needed > _budget["states"]:
        raise BudgetExceeded(needed, _budget["states"], what)


def check_subsets(n: int, k: int) -> None:
    """Refuse a search over all ``k``-subsets of ``n`` items that is too large."""
    needed = comb(n, k)
    limit = SUBSET_FACTOR * _budget["states"]
    if needed > limit:
        raise BudgetExceeded(needed, limit, f"{k}-subsets of {n} vertices")
