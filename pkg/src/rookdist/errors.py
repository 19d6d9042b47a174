"""Exception types shared across the package."""

from __future__ import annotations


class RookDistError(Exception):
    """Base class for all package errors."""


class GridError(RookDistError, ValueError):
    """Malformed grid, coloring, list assignment or index."""


class UnsupportedGrid(GridError):
    """Grid shape outside the supported range (the package needs n < m)."""


class BudgetExceeded(RookDistError):
    """A search refused to run because its space exceeds the configured budget.

    ``needed`` is the size the search would have to visit (or a lower bound on
    it) and ``budget`` the limit that was in force.
    """

    def __init__(self, what: str, needed: int | None, budget: int):
        self.what = what
        self.needed = needed
        self.budget = budget
        size = "unknown" if needed is None else str(needed)
        super().__init__(f"{what}: search space {size} exceeds budget {budget}")


class Indeterminate(BudgetExceeded):
    """Borderline distinguishing number could not be settled within budget."""

    def __init__(self, n: int, m: int, candidates: tuple[int, int], needed, budget):
        self.n = n
        self.m = m
        self.candidates = candidates
        super().__init__(f"borderline D(K_{n} x K_{m}) in {candidates}", needed, budget)


class PlanExhausted(RookDistError):
    """The two-phase constructor found no coloring compatible with its plan."""


class BoundViolation(RookDistError, AssertionError):
    """A checked inequality failed; carries the offending instance."""

    def __init__(self, message: str, counterexample=None):
        self.counterexample = counterexample
        super().__init__(message)
