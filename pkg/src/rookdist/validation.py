"""The end-to-end validation suite behind ``rookdist validate``.

Each criterion is a function returning a :class:`CriterionResult`; the
acceptance tests call the same functions.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from mpmath import iv

from . import bounds
from .constructor import Status, Strategy, check_construction, solve
from .corpus import random_coloring, random_list_assignment, symmetric_coloring
from .errors import BudgetExceeded
from .exact import distinguishing_number
from .grid import GridSpec, ListAssignment
from .oracle import (SEARCH_BUDGET, is_distinguishing, list_distinguishing_exhaustive,
                     min_distinguishing_number, naive_is_distinguishing)
from .poly import closed_form_coefficient, cn_list_coloring, target_coefficient

DEFAULT_SEED = 20240521


@dataclass
class CriterionResult:
    number: int
    name: str
    module: str
    passed: bool
    seconds: float
    limit_seconds: float
    status: str = ""
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.passed else "fail"

    def line(self) -> str:
        return (f"[{self.status.upper():7}] {self.number}. {self.name} "
                f"({self.seconds:.1f}s / {self.limit_seconds:.0f}s)")

    def to_json(self) -> dict:
        return {"criterion": self.number, "name": self.name, "module": self.module,
                "status": self.status, "pass": self.passed,
                "seconds": round(self.seconds, 3), "limit_seconds": self.limit_seconds,
                **self.details}


def grid_pairs(m_max: int):
    return [(n, m) for m in range(2, m_max + 1) for n in range(1, m)]


def criterion_formula(budget: int = SEARCH_BUDGET, m_max: int = 6, seed: int = DEFAULT_SEED) -> dict:
    mismatches = []
    rows = []
    for n, m in grid_pairs(m_max):
        formula = distinguishing_number(n, m, budget)
        k, _ = min_distinguishing_number(GridSpec(n, m), budget)
        rows.append([n, m, formula.value, k, formula.resolution.value])
        if formula.value != k:
            mismatches.append((n, m, formula.value, k))
    return {"passed": not mismatches, "pairs": len(rows), "mismatches": mismatches, "table": rows}


def criterion_coefficient(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED) -> dict:
    got = {n: target_coefficient(n) for n in (1, 2, 3, 4)}
    want = {n: closed_form_coefficient(n) for n in got}
    return {"passed": got == want == {1: 1, 2: 2, 3: 12, 4: 288},
            "coefficients": got, "closed_form": want}


def criterion_cn_solver(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED,
                        trials: int = 1000, sizes=(2, 3, 4)) -> dict:
    rng = random.Random(seed)
    failures = []
    for n in sizes:
        for t in range(trials):
            L = random_list_assignment(rng, n, n + 1, 2, n + 3)
            c = cn_list_coloring(L)
            if not (L.admits(c) and is_distinguishing(c).verdict):
                failures.append((n, t))
    return {"passed": not failures, "instances": trials * len(sizes), "failures": failures}


def criterion_two_term_bound(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED, n_max: int = 6) -> dict:
    out = {}
    ok = True
    for n in range(1, n_max + 1):
        rep = bounds.check_two_term_bound(n)
        out[n] = [rep.checked, rep.max_observed, rep.bound]
        ok = ok and rep.passed and rep.attained
    return {"passed": ok, "per_n": out}


def criterion_many_term_bound(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED,
                     k: int = 3, n_max: int = 5) -> dict:
    out = {}
    ok = True
    for n in range(1, n_max + 1):
        rep = bounds.check_many_term_bound(n, k)
        out[n] = [rep.checked, rep.max_observed, bounds.to_jsonable(rep.bound)[0], rep.extra["max_merged_r"]]
        ok = ok and rep.passed
    return {"passed": ok, "per_n": out}


def criterion_binomial(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED, n_max: int = 500) -> dict:
    prec = bounds.DEFAULT_PREC
    rep = bounds.check_binomial_inequality(n_max, prec=prec)
    with bounds.precision(prec):
        f21, f31, f32 = bounds.f_na(2, 1), bounds.f_na(3, 1), bounds.f_na(3, 2)
        exact21 = iv.sqrt(2) / 4
        exact31 = iv.mpf(675) / 4096 * iv.sqrt(5)
        rel = iv.mpf("1e-10")
        anchors = {
            "f21_matches": abs(f21 - exact21).b < (rel * exact21).a,
            "f21_below": f21.b < iv.mpf("0.35356").a,
            "f31_matches": abs(f31 - exact31).b < (rel * exact31).a,
            "f32_matches": abs(f32 - exact31).b < (rel * exact31).a,
            "f31_below": f31.b < iv.mpf("0.36850").a,
        }
        gap = rep.extra["gap_to_C_at_n_max"]
        near = gap.b < iv.mpf("1e-2").a
    passed = (rep.passed and all(anchors.values()) and rep.extra["f_n1_increasing"] and near)
    return {"passed": passed, "points": rep.checked, "grid_points": rep.extra.get("grid_points", 0),
            "max": bounds.to_jsonable(rep.max_observed)[1], "argmax": rep.extra["argmax"],
            "f_n1_increasing": rep.extra["f_n1_increasing"], "gap_to_C": bounds.to_jsonable(gap)[1], **anchors}


def verifier_grids(limit: int = 10**6) -> list[tuple[int, int]]:
    out = []
    for n in range(1, 10):
        for m in range(n + 1, 12):
            if math.factorial(n) * math.factorial(m) <= limit:
                out.append((n, m))
    return out


def criterion_oracle(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED, count: int = 10_000) -> dict:
    rng = random.Random(seed)
    grids = verifier_grids()
    disagreements = []
    verdicts = {True: 0, False: 0}
    for t in range(count):
        n, m = rng.choice(grids)
        grid = GridSpec(n, m)
        colors = rng.randint(1, 4)
        c = (symmetric_coloring(rng, grid, colors) if t % 2
             else random_coloring(rng, grid, colors))
        fast = is_distinguishing(c)
        slow = naive_is_distinguishing(c)
        verdicts[fast.verdict] += 1
        if fast.verdict != slow.verdict:
            disagreements.append(c.to_json())
    return {"passed": not disagreements, "colorings": count, "grids": len(grids),
            "distinguishing": verdicts[True], "not_distinguishing": verdicts[False],
            "disagreements": disagreements[:5]}


def _constructor_instance(rng: random.Random, t: int, cap: int) -> tuple[ListAssignment, str]:
    while True:
        n = rng.randint(1, 4)
        m = rng.randint(n + 1, n + 4)
        kind = t % 3
        if kind == 0 and n >= 2:
            L = random_list_assignment(rng, n, m, 2, rng.randint(3, 5), "no-uniform")
        elif kind == 1:
            L = random_list_assignment(rng, n, m, rng.randint(2, 3), 5, "all-uniform")
        else:
            cols = [[sorted(rng.sample(range(4), rng.randint(1, 3))) for _ in range(n)]
                    for _ in range(m)]
            L = ListAssignment.from_rows([[cols[j][i] for j in range(m)] for i in range(n)])
        if L.search_size() <= cap:
            return L, ("uniform" if t % 7 else "prefix")


def criterion_constructor(budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED,
                          count: int = 500, cap: int = 10**6) -> dict:
    rng = random.Random(seed)
    mismatches = []
    bad = []
    strategies = {s.value: 0 for s in Strategy}
    statuses = {s.value: 0 for s in Status}
    for t in range(count):
        L, policy = _constructor_instance(rng, t, cap)
        res = solve(L, budget=cap, policy=policy)
        truth = list_distinguishing_exhaustive(L, cap)
        strategies[res.plan.a_coloring_strategy.value] += 1
        statuses[res.status.value] += 1
        if (res.status is Status.FOUND) != (truth is not None) or res.status is Status.REFUSED:
            mismatches.append(L.to_json())
        if res.status is Status.FOUND:
            checks = {"in_lists": L.admits(res.coloring),
                      "distinguishing": is_distinguishing(res.coloring).verdict}
            if res.route == "constructor":
                checks = check_construction(L, res.plan, res.coloring)
            if not all(checks.values()):
                bad.append(L.to_json())
    passed = not mismatches and not bad and all(strategies.values())
    return {"passed": passed, "instances": count, "strategies": strategies, "statuses": statuses,
            "mismatches": mismatches[:5], "uncertified": bad[:5]}


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    module: str
    limit_seconds: float
    run: Callable[..., dict]


CRITERIA = (
    Criterion(1, "distinguishing number formula = exhaustive minimum, n < m <= 6", "exact_dist", 300, criterion_formula),
    Criterion(2, "target coefficient = prod r! for n = 1..4", "polynomial", 60, criterion_coefficient),
    Criterion(3, "Nullstellensatz solver on 1000 random 2-list instances, n = 2, 3, 4", "polynomial", 300, criterion_cn_solver),
    Criterion(4, "k = 2 coefficient bound binom(n, ceil(n/2)), n <= 6, attained", "bounds", 300, criterion_two_term_bound),
    Criterion(5, "k = 3 coefficient bound C k^(n+1) / n^(1/4), n <= 5, merged r bound", "bounds", 600, criterion_many_term_bound),
    Criterion(6, "binomial inequality f(n, a) < 0.409917, a < n <= 500, anchors", "bounds", 60, criterion_binomial),
    Criterion(7, "structured and naive verifiers agree on 10000 colorings", "oracle", 300, criterion_oracle),
    Criterion(8, "constructor verdicts match the exhaustive oracle on 500 instances", "constructor", 600, criterion_constructor),
)

MODULES = sorted({c.module for c in CRITERIA})


def run_criterion(crit: Criterion, budget: int = SEARCH_BUDGET, seed: int = DEFAULT_SEED) -> CriterionResult:
    start = time.perf_counter()
    if budget <= 0:
        return CriterionResult(crit.number, crit.name, crit.module, False, 0.0,
                               crit.limit_seconds, "refused", {"detail": "zero budget"})
    try:
        details = crit.run(budget=budget, seed=seed)
    except BudgetExceeded as exc:
        return CriterionResult(crit.number, crit.name, crit.module, False,
                               time.perf_counter() - start, crit.limit_seconds, "refused",
                               {"detail": str(exc)})
    elapsed = time.perf_counter() - start
    passed = bool(details.pop("passed")) and elapsed < crit.limit_seconds
    return CriterionResult(crit.number, crit.name, crit.module, passed, elapsed,
                           crit.limit_seconds, details=details)


def _run_numbered(args):
    number, budget, seed = args
    crit = next(c for c in CRITERIA if c.number == number)
    return run_criterion(crit, budget, seed)


def run_full_validation(budget: int = SEARCH_BUDGET, only: Optional[set[str]] = None,
                        seed: int = DEFAULT_SEED, jobs: int = 1) -> list[CriterionResult]:
    chosen = [c for c in CRITERIA if only is None or c.module in only]
    work = [(c.number, budget, seed) for c in chosen]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_numbered, work))
    return [_run_numbered(w) for w in work]
