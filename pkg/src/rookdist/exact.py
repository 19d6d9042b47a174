"""Closed-form distinguishing number of K_n x K_m.

With k the unique integer >= 2 such that (k-1)^n < m <= k^n, the value is k
when m <= k^n - ceil(log_k n) - 1 and k + 1 when m >= k^n - ceil(log_k n) + 1.
The single borderline value m = k^n - ceil(log_k n) is settled by searching
for a distinguishing k-coloring with the oracle.  Everything is integer
arithmetic; no floating-point powers or logarithms.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass

from .errors import BudgetExceeded, GridError, Indeterminate
from .grid import GridSpec
from .oracle import SEARCH_BUDGET, find_distinguishing_coloring


class Resolution(str, enum.Enum):
    FORMULA = "formula"
    SEARCH = "search"


@dataclass(frozen=True)
class DistNumberResult:
    k_band: int
    value: int
    borderline: bool
    resolution: Resolution

    def to_json(self) -> dict:
        out = asdict(self)
        out["resolution"] = self.resolution.value
        return out


def ceil_log(base: int, x: int) -> int:
    """Smallest t >= 0 with base**t >= x."""
    if base < 2 or x < 1:
        raise ValueError(f"ceil_log needs base >= 2 and x >= 1, got {base}, {x}")
    t, p = 0, 1
    while p < x:
        p *= base
        t += 1
    return t


def band(n: int, m: int) -> int:
    """The k >= 2 with (k-1)**n < m <= k**n."""
    if n < 1 or m < 2:
        raise GridError(f"band needs n >= 1 and m >= 2, got n={n}, m={m}")
    # integer n-th root of m, rounded up
    lo, hi = 1, 2
    while hi**n < m:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**n >= m:
            hi = mid
        else:
            lo = mid
    return max(hi, 2)


def borderline_m(n: int, k: int) -> int:
    return k**n - ceil_log(k, n)


def distinguishing_number(n: int, m: int, search_budget: int = SEARCH_BUDGET) -> DistNumberResult:
    grid = GridSpec(n, m)
    k = band(n, m)
    edge = borderline_m(n, k)
    if m < edge:
        return DistNumberResult(k, k, False, Resolution.FORMULA)
    if m > edge:
        return DistNumberResult(k, k + 1, False, Resolution.FORMULA)
    try:
        found = find_distinguishing_coloring(grid, k, search_budget)
    except BudgetExceeded as exc:
        raise Indeterminate(n, m, (k, k + 1), exc.needed, exc.budget) from exc
    value = k if found is not None else k + 1
    return DistNumberResult(k, value, True, Resolution.SEARCH)
