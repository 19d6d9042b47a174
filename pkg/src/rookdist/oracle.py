"""Brute-force ground truth for distinguishing colorings of K_n x K_m.

Two independent verifiers decide whether a coloring is distinguishing:

* :func:`is_distinguishing` loops over the n! row permutations and, for each
  one, decides by multiset matching of column vectors whether some column
  permutation completes it to a color-preserving automorphism.
* :func:`naive_is_distinguishing` enumerates S_n x S_m directly (column
  permutations depth-first, abandoning a prefix as soon as one assigned column
  disagrees).

On top of them sit the exact small-instance searches for D and for
list-distinguishing colorings.  Every search takes an explicit budget and
raises :class:`~rookdist.errors.BudgetExceeded` instead of truncating.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Optional

from .errors import BudgetExceeded, UnsupportedGrid
from .grid import (Automorphism, Coloring, GridSpec, ListAssignment,
                   apply_automorphism, row_permutations)

NAIVE_BUDGET = 10**8
SEARCH_BUDGET = 10**7
LIST_BUDGET = 10**6


@dataclass(frozen=True)
class DistinguishingCertificate:
    verdict: bool
    witness: Optional[Automorphism] = None

    def __post_init__(self):
        if not self.verdict and self.witness is None:
            raise ValueError("a negative verdict needs a witness")

    def to_json(self) -> dict:
        out = {"verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _certify(c: Coloring, g: Automorphism) -> DistinguishingCertificate:
    # cheap enough to run on every negative verdict
    if g.is_identity or apply_automorphism(g, c) != c:
        raise AssertionError(f"bogus witness {g} for {c.cells}")
    return DistinguishingCertificate(False, g)


def _require_supported(grid: GridSpec):
    if grid.n >= grid.m:
        raise UnsupportedGrid(f"need n < m, got {grid.n}x{grid.m}")


def is_distinguishing(c: Coloring) -> DistinguishingCertificate:
    """Decide whether only the identity of S_n x S_m fixes ``c``.

    Runs in O(n! * m * n): for a row permutation sigma, a matching column
    permutation exists iff the sigma-permuted column vectors are a
    rearrangement of the original ones.  Row permutations are tried in
    lexicographic order starting with the identity, so duplicate columns are
    reported as a plain column transposition.
    """
    grid = c.grid
    _require_supported(grid)
    n, m = grid.n, grid.m
    cols = c.columns()

    where: dict[tuple, list[int]] = defaultdict(list)
    for j, v in enumerate(cols, 1):
        where[v].append(j)

    ident_rows = tuple(range(1, n + 1))
    dup = [js for js in where.values() if len(js) > 1]
    if dup:
        a, b = min(js[:2] for js in dup)
        tau = list(range(1, m + 1))
        tau[a - 1], tau[b - 1] = b, a
        return _certify(c, Automorphism(ident_rows, tuple(tau)))

    # all columns distinct from here on, so each vector has exactly one home
    home = {v: js[0] for v, js in where.items()}
    for sigma in row_permutations(n):
        if sigma == ident_rows:
            continue
        inv = [0] * n
        for i, s in enumerate(sigma):
            inv[s - 1] = i
        tau = []
        for v in cols:
            j = home.get(tuple(v[inv[i]] for i in range(n)))
            if j is None:
                break
            tau.append(j)
        else:
            return _certify(c, Automorphism(sigma, tuple(tau)))
    return DistinguishingCertificate(True)


def naive_is_distinguishing(c: Coloring, budget: int = NAIVE_BUDGET) -> DistinguishingCertificate:
    """Reference verifier: search all of S_n x S_m for a nontrivial fixer.

    Refuses when n! * m! exceeds ``budget``.  Column permutations are built
    position by position; a partial tau is dropped as soon as one of its
    assigned columns fails, which skips only permutations already known to
    fail.
    """
    grid = c.grid
    _require_supported(grid)
    n, m = grid.n, grid.m
    size = math.factorial(n) * math.factorial(m)
    if size > budget:
        raise BudgetExceeded("naive verifier", size, budget)
    cols = c.columns()

    for sigma in permutations(range(n)):
        moved = [tuple(v[sigma.index(i)] for i in range(n)) for v in cols]
        sigma_is_id = all(s == i for i, s in enumerate(sigma))
        tau = [0] * m
        used = [False] * m

        def extend(k: int) -> bool:
            if k == m:
                return not (sigma_is_id and all(t == j for j, t in enumerate(tau)))
            for t in range(m):
                if not used[t] and moved[k] == cols[t]:
                    used[t] = True
                    tau[k] = t
                    if extend(k + 1):
                        return True
                    used[t] = False
            return False

        if extend(0):
            g = Automorphism(tuple(s + 1 for s in sigma), tuple(t + 1 for t in tau))
            return _certify(c, g)
    return DistinguishingCertificate(True)


def _distinct_rows(columns) -> bool:
    rows = list(zip(*columns))
    return len(set(rows)) == len(rows)


RENAMING_PRUNE_MAX_K = 5


def _renaming_minimal(columns: tuple, k: int) -> bool:
    """True if no renaming of the k colors gives a lexicographically smaller
    sorted column tuple.  Pruning only: for k beyond RENAMING_PRUNE_MAX_K the
    k! renamings cost more than they save and every candidate is kept."""
    if k > RENAMING_PRUNE_MAX_K:
        return True
    for perm in permutations(range(k)):
        if all(p == i for i, p in enumerate(perm)):
            continue
        renamed = tuple(sorted(tuple(perm[x] for x in v) for v in columns))
        if renamed < columns:
            return False
    return True


def reduced_search_size(grid: GridSpec, k: int) -> int:
    return math.comb(k**grid.n, grid.m)


def find_distinguishing_coloring(grid: GridSpec, k: int,
                                 budget: int = SEARCH_BUDGET) -> Optional[Coloring]:
    """A distinguishing coloring with colors in {0..k-1}, or None if none exists.

    A distinguishing coloring has pairwise distinct columns, and reordering
    columns or renaming colors preserves the property, so only sorted m-sets
    of distinct column vectors that are least among their color renamings
    are examined.
    """
    _require_supported(grid)
    size = reduced_search_size(grid, k)
    if size > budget:
        raise BudgetExceeded(f"distinguishing {k}-coloring of K_{grid.n} x K_{grid.m}", size, budget)
    vectors = list(product(range(k), repeat=grid.n))
    for cols in combinations(vectors, grid.m):
        if not _distinct_rows(cols):
            continue
        if not _renaming_minimal(cols, k):
            continue
        c = Coloring.from_columns(cols)
        if is_distinguishing(c).verdict:
            return c
    return None


def min_distinguishing_number(grid: GridSpec, budget: int = SEARCH_BUDGET) -> tuple[int, Coloring]:
    """Least k with a distinguishing k-coloring, with a witness.

    ``budget`` caps the total number of reduced candidates over all k tried
    and is checked before each k is searched.
    """
    _require_supported(grid)
    # terminates: D(K_n x K_m) is finite
    total = 0
    k = 1
    while True:
        total += reduced_search_size(grid, k)
        if total > budget:
            raise BudgetExceeded(f"min distinguishing number of K_{grid.n} x K_{grid.m}", total, budget)
        c = find_distinguishing_coloring(grid, k, budget)
        if c is not None:
            return k, c
        k += 1


def list_distinguishing_exhaustive(L: ListAssignment,
                                   budget: int = LIST_BUDGET) -> Optional[Coloring]:
    """First distinguishing L-coloring in column-major lexicographic order,
    or None when none exists.  Refuses if the product of list sizes exceeds
    ``budget``.
    """
    grid = L.grid
    _require_supported(grid)
    size = L.search_size()
    if size > budget:
        raise BudgetExceeded("list-distinguishing exhaustive search", size, budget)
    options = [list(product(*L.column(j))) for j in range(1, grid.m + 1)]
    chosen: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def dfs(j: int) -> Optional[Coloring]:
        if j == grid.m:
            c = Coloring.from_columns(chosen)
            return c if is_distinguishing(c).verdict else None
        for v in options[j]:
            # equal columns are always swappable
            if v in seen:
                continue
            seen.add(v)
            chosen.append(v)
            found = dfs(j + 1)
            if found is not None:
                return found
            chosen.pop()
            seen.discard(v)
        return None

    return dfs(0)
