"""Distinguishing and list-distinguishing colorings of rook's graphs K_n x K_m.

Exact oracles, the closed-form distinguishing number, the polynomial
certificate for K_n x K_{n+1}, coefficient and binomial bound checkers, and a
two-phase list-coloring constructor.
"""

from .errors import (BoundViolation, BudgetExceeded, GridError, Indeterminate,
                     PlanExhausted, RookDistError, UnsupportedGrid)
from .grid import Automorphism, Coloring, GridSpec, ListAssignment, apply_automorphism

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "BoundViolation", "BudgetExceeded", "Coloring", "GridError", "GridSpec",
    "Indeterminate", "ListAssignment", "PlanExhausted", "RookDistError", "UnsupportedGrid",
    "apply_automorphism",
]
