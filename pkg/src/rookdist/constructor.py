"""Two-phase list-distinguishing colorer for K_n x K_m.

Phase 1 picks a set A of columns and colors it so that the sub-grid on A is
distinguishing; this pins down the rows.  Phase 2 colors every other column
with a coloring whose pattern (color multiset) matches no column of A and
whose vector differs from every other phase-2 column.  Then any
color-preserving automorphism must map A to itself, fix the rows, and hence
fix every column.

The asymptotic counting that guarantees success in the large-n regime is
replaced here by exact search: phase 2 is solved as a distinct-representative
problem, failures escalate to other colorings of A, and a plan that cannot
be completed hands over to the exhaustive oracle.  Every returned coloring is
checked by the oracle.
"""

from __future__ import annotations

import enum
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import BudgetExceeded, GridError, PlanExhausted, UnsupportedGrid
from .grid import (ColorPattern, Coloring, GridSpec, ListAssignment,
                   column_pattern, pattern_of)
from .oracle import (LIST_BUDGET, DistinguishingCertificate, is_distinguishing,
                     list_distinguishing_exhaustive)
from .poly import cn_list_coloring


class Strategy(str, enum.Enum):
    NULLSTELLENSATZ = "cn_lemma3"
    FIXED_2COLORING = "fixed_distinguishing_2coloring"
    BACKTRACK = "backtrack_search"


class Policy(str, enum.Enum):
    UNIFORM = "uniform"  # list-uniform columns, topped up to n + 1
    PREFIX = "prefix"   # the first `width` columns


@dataclass(frozen=True)
class ColumnClass:
    index: int
    list_uniform: bool
    column_list_union: frozenset
    min_list_size: int


@dataclass(frozen=True)
class ConstructionPlan:
    A: tuple[int, ...]
    a_coloring_strategy: Strategy
    phase2_order: tuple[int, ...]

    def to_json(self) -> dict:
        return {"A": list(self.A), "strategy": self.a_coloring_strategy.value,
                "phase2_order": list(self.phase2_order)}


def classify_columns(L: ListAssignment) -> list[ColumnClass]:
    out = []
    for j in range(1, L.grid.m + 1):
        lists = L.column(j)
        uniform = all(lst == lists[0] for lst in lists)
        union = frozenset().union(*map(frozenset, lists))
        sizes = [len(lst) for lst in lists]
        if not uniform and all(s == 2 for s in sizes):
            # two distinct 2-sets already cover three colors
            assert len(union) >= 3
        out.append(ColumnClass(j, uniform, union, min(sizes)))
    return out


def prefix_width(n: int) -> int:
    """ceil(log_1.09 n): least w with 1.09**w >= n, in exact rationals."""
    w, power = 0, Fraction(1)
    while power < n:
        power *= Fraction(109, 100)
        w += 1
    return w


def choose_A(classes: Sequence[ColumnClass], n: int, policy: Policy | str = Policy.UNIFORM,
             width: Optional[int] = None) -> ConstructionPlan:
    m = len(classes)
    if m <= n:
        raise UnsupportedGrid(f"need m > n, got n={n}, m={m}")
    policy = Policy(policy)
    by_index = {c.index: c for c in classes}

    if policy is Policy.PREFIX:
        w = prefix_width(n) if width is None else width
        w = min(max(w, n + 1), m)
        A = tuple(range(1, w + 1))
        two = all(by_index[j].min_list_size >= 2 for j in A)
        strategy = Strategy.NULLSTELLENSATZ if (w == n + 1 and two) else Strategy.BACKTRACK
    else:
        uniform = [c.index for c in classes if c.list_uniform]
        if len(uniform) >= n + 1:
            A = tuple(uniform)
            two = all(by_index[j].min_list_size >= 2 for j in A)
            strategy = Strategy.FIXED_2COLORING if two else Strategy.BACKTRACK
        else:
            extra = [c.index for c in classes if not c.list_uniform][: n + 1 - len(uniform)]
            A = tuple(uniform) + tuple(extra)
            two = all(by_index[j].min_list_size >= 2 for j in A)
            strategy = Strategy.NULLSTELLENSATZ if two else Strategy.BACKTRACK
    rest = tuple(j for j in range(1, m + 1) if j not in A)
    return ConstructionPlan(A, strategy, rest)


# ---------------------------------------------------------------------------
# phase 1
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def binary_template(n: int, width: int, max_candidates: int = LIST_BUDGET) -> tuple:
    """A distinguishing 0/1 coloring of K_n x K_width, as a tuple of columns.

    Columns without both colors are avoided when possible.  Returns () when
    no distinguishing 2-coloring exists at all.
    """
    for allow_mono in (False, True):
        vectors = [v for v in product((0, 1), repeat=n) if allow_mono or len(set(v)) == 2]
        seen = 0
        for cols in combinations(vectors, width):
            seen += 1
            if seen > max_candidates:
                raise BudgetExceeded(f"binary template {n}x{width}", None, max_candidates)
            rows = list(zip(*cols))
            if len(set(rows)) != n:
                continue
            if is_distinguishing(Coloring.from_columns(cols)).verdict:
                return cols
    return ()


def _uniform_candidate(L: ListAssignment, A: Sequence[int]) -> Optional[Coloring]:
    template = binary_template(L.grid.n, len(A))
    if not template:
        return None
    cols = []
    for j, bits in zip(A, template):
        lst = L.column(j)[0]
        cols.append(tuple(lst[-1] if b else lst[0] for b in bits))
    return Coloring.from_columns(cols)


def _all_A_colorings(LA: ListAssignment, budget: int) -> Iterator[Coloring]:
    """Distinguishing colorings of the A sub-grid, column-major lexicographic."""
    size = LA.search_size()
    if size > budget:
        raise BudgetExceeded("phase-1 backtracking", size, budget)
    options = [list(product(*LA.column(j))) for j in range(1, LA.grid.m + 1)]
    chosen: list = []

    def dfs(j: int):
        if j == len(options):
            c = Coloring.from_columns(chosen)
            if is_distinguishing(c).verdict:
                yield c
            return
        for v in options[j]:
            if v in chosen:
                continue
            chosen.append(v)
            yield from dfs(j + 1)
            chosen.pop()

    yield from dfs(0)


def a_colorings(L: ListAssignment, plan: ConstructionPlan,
                budget: int = LIST_BUDGET) -> Iterator[Coloring]:
    """Phase-1 candidates: the strategy's own coloring first, then every other
    distinguishing L-coloring of the A sub-grid."""
    LA = L.restrict(plan.A)
    first = None
    if plan.a_coloring_strategy is Strategy.NULLSTELLENSATZ:
        first = cn_list_coloring(LA)
    elif plan.a_coloring_strategy is Strategy.FIXED_2COLORING:
        first = _uniform_candidate(L, plan.A)
        if first is not None and not is_distinguishing(first).verdict:
            first = None
    if first is not None:
        yield first
    for c in _all_A_colorings(LA, budget):
        if c != first:
            yield c


def color_A(L: ListAssignment, plan: ConstructionPlan,
            budget: int = LIST_BUDGET) -> Coloring:
    """First phase-1 coloring of the A columns (columns in plan.A order)."""
    for c in a_colorings(L, plan, budget):
        return c
    raise PlanExhausted(f"no distinguishing L-coloring of columns {plan.A}")


# ---------------------------------------------------------------------------
# phase 2
# ---------------------------------------------------------------------------

class AdmissibleCount(NamedTuple):
    value: int
    exact: bool


def _column_options(L: ListAssignment, j: int, budget: int) -> list[tuple[int, ...]]:
    lists = L.column(j)
    size = math.prod(len(x) for x in lists)
    if size > budget:
        raise BudgetExceeded(f"colorings of column {j}", size, budget)
    return list(product(*lists))


def admissible_colorings_count(L: ListAssignment, j: int, forbidden_patterns,
                               budget: int = LIST_BUDGET, samples: int = 10_000,
                               seed: int = 0) -> AdmissibleCount:
    """Number of L-colorings of column j whose pattern is not forbidden.

    Over budget, returns a seeded Monte Carlo estimate flagged ``exact=False``.
    """
    forbidden = {_as_pattern(p) for p in forbidden_patterns}
    lists = L.column(j)
    total = math.prod(len(x) for x in lists)
    if total <= budget:
        hits = sum(1 for v in product(*lists) if pattern_of(v) not in forbidden)
        return AdmissibleCount(hits, True)
    rng = random.Random(seed)
    hits = sum(1 for _ in range(samples)
               if pattern_of(tuple(rng.choice(x) for x in lists)) not in forbidden)
    return AdmissibleCount(round(total * hits / samples), False)


def _as_pattern(p) -> ColorPattern:
    if isinstance(p, dict):
        return tuple(sorted(p.items()))
    if isinstance(p, Counter):
        return tuple(sorted(p.items()))
    return tuple(tuple(x) for x in p)


def _pattern_distance(p: ColorPattern, q: ColorPattern) -> int:
    a, b = dict(p), dict(q)
    return sum(abs(a.get(c, 0) - b.get(c, 0)) for c in set(a) | set(b))


def _ranked(options, a_patterns) -> list[tuple[int, ...]]:
    """Admissible vectors, farthest from every A-pattern first, then lexicographic."""
    scored = []
    for v in options:
        pat = pattern_of(v)
        if pat in a_patterns:
            continue
        dist = min((_pattern_distance(pat, q) for q in a_patterns), default=0)
        scored.append((-dist, v))
    scored.sort()
    return [v for _, v in scored]


def _has_sdr(cands: list[list], taken: set) -> bool:
    """Kuhn matching: can every column get a distinct vector outside ``taken``?"""
    owner: dict = {}

    def augment(col: int, seen: set) -> bool:
        for v in cands[col]:
            if v in taken or v in seen:
                continue
            seen.add(v)
            if v not in owner or augment(owner[v], seen):
                owner[v] = col
                return True
        return False

    return all(augment(col, set()) for col in range(len(cands)))


def greedy_phase2(L: ListAssignment, plan: ConstructionPlan, partial: Coloring,
                  budget: int = LIST_BUDGET) -> Coloring:
    """Extend a coloring of the A columns to the whole grid.

    Columns are taken in ``plan.phase2_order``; each gets the first vector in
    heuristic order that keeps a distinct-vector completion of the remaining
    columns possible, so the walk never dead-ends and equals the first
    solution of a plain backtracking search in the same order.
    """
    n, m = L.grid.n, L.grid.m
    if partial.grid.n != n or partial.grid.m != len(plan.A):
        raise GridError("partial coloring does not cover exactly the A columns")
    a_patterns = {pattern_of(v) for v in partial.columns()}
    cands = [_ranked(_column_options(L, j, budget), a_patterns) for j in plan.phase2_order]
    if not _has_sdr(cands, set()):
        raise PlanExhausted("phase 2 has no distinct admissible vectors for every column")
    chosen: list[tuple[int, ...]] = []
    taken: set = set()
    for idx in range(len(cands)):
        for v in cands[idx]:
            if v in taken:
                continue
            taken.add(v)
            if _has_sdr(cands[idx + 1:], taken):
                chosen.append(v)
                break
            taken.discard(v)
        else:  # pragma: no cover - excluded by the matching check
            raise PlanExhausted("phase 2 dead end")
    columns: dict[int, tuple[int, ...]] = dict(zip(plan.A, partial.columns()))
    columns.update(zip(plan.phase2_order, chosen))
    return Coloring.from_columns([columns[j] for j in range(1, m + 1)])


def check_construction(L: ListAssignment, plan: ConstructionPlan, c: Coloring) -> dict[str, bool]:
    """The four properties every constructed coloring must have."""
    a_pats = {column_pattern(c, j) for j in plan.A}
    rest = list(plan.phase2_order)
    return {
        "in_lists": L.admits(c),
        "patterns_avoid_A": all(column_pattern(c, j) not in a_pats for j in rest),
        "distinct_vectors": len({c.column(j) for j in rest}) == len(rest),
        "distinguishing": is_distinguishing(c).verdict,
    }


# ---------------------------------------------------------------------------
# top level
# ---------------------------------------------------------------------------

class Status(str, enum.Enum):
    FOUND = "found"
    NONEXISTENT = "nonexistent"
    REFUSED = "refused"


@dataclass
class SolveResult:
    status: Status
    coloring: Optional[Coloring] = None
    certificate: Optional[DistinguishingCertificate] = None
    plan: Optional[ConstructionPlan] = None
    route: str = ""
    detail: str = ""
    stats: dict = field(default_factory=dict)

    def to_json(self, emit_certificate: bool = False) -> dict:
        out: dict = {"status": self.status.value, "route": self.route}
        if self.coloring is not None:
            out["coloring"] = self.coloring.to_json()
        if self.plan is not None:
            out["plan"] = self.plan.to_json()
        if emit_certificate and self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.detail:
            out["detail"] = self.detail
        return out


def solve(L: ListAssignment, budget: int = LIST_BUDGET, policy: Policy | str = Policy.UNIFORM,
          width: Optional[int] = None, fallback: bool = True) -> SolveResult:
    """Distinguishing L-coloring, verified nonexistence, or a budget refusal.

    classify -> choose_A -> color_A -> phase 2 -> oracle certificate; when no
    coloring of A can be completed, the exhaustive oracle decides.
    """
    grid = L.grid
    if grid.n >= grid.m:
        raise UnsupportedGrid(f"need n < m, got {grid.n}x{grid.m}")
    plan = choose_A(classify_columns(L), grid.n, policy, width)
    tried = 0
    try:
        for partial in a_colorings(L, plan, budget):
            tried += 1
            try:
                c = greedy_phase2(L, plan, partial, budget)
            except PlanExhausted:
                continue
            cert = is_distinguishing(c)
            if not cert.verdict:
                raise AssertionError(f"constructor produced a non-distinguishing coloring {c.cells}")
            return SolveResult(Status.FOUND, c, cert, plan, "constructor",
                               stats={"a_colorings_tried": tried})
    except BudgetExceeded as exc:
        detail = str(exc)
    else:
        detail = f"plan exhausted after {tried} phase-1 colorings"

    if not fallback:
        raise PlanExhausted(detail)
    try:
        c = list_distinguishing_exhaustive(L, budget)
    except BudgetExceeded as exc:
        return SolveResult(Status.REFUSED, plan=plan, route="oracle", detail=f"{detail}; {exc}")
    if c is None:
        return SolveResult(Status.NONEXISTENT, plan=plan, route="oracle", detail=detail)
    return SolveResult(Status.FOUND, c, is_distinguishing(c), plan, "oracle", detail=detail)
