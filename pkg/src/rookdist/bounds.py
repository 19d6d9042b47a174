"""Checkers for the coefficient and binomial-distribution inequalities.

Coefficient bounds concern S = prod_{i=1..n} (x(i,1) + ... + x(i,k)) after
each x(i, j) is replaced by a formal variable c_1..c_r, with the k variables
inside one factor distinct.  Two families are checked exhaustively over
relabeling classes of such assignments:

* k = 2: every coefficient is at most binom(n, ceil(n/2));
* k >= 3: every coefficient is at most C * k**(n+1) / n**(1/4), where
  C = (3 / (2e))**(3/2) = 0.409916...;

and a searcher looks for assignments whose largest coefficient beats the
balanced k-multinomial coefficient.

The binomial part evaluates f(n, a, p) = sqrt(n) binom(n, a) p^(a+1/2)
(1-p)^(n-a+1/2) in interval arithmetic and checks that it stays below C.
Every comparison against an irrational quantity is made on interval
endpoints, rounded against the claim being tested.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Optional, Sequence

from mpmath import iv, libmp

from .errors import BoundViolation, BudgetExceeded, GridError
from .poly import SparsePoly

DEFAULT_PREC = 128
MAX_MAXIMIZERS = 64


@contextmanager
def precision(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


# ---------------------------------------------------------------------------
# formal-variable assignments
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FormAssignment:
    """n factors, each a sorted tuple of k distinct variable indices (0-based)."""

    n: int
    k: int
    slots: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.slots) != self.n:
            raise GridError(f"expected {self.n} factors, got {len(self.slots)}")
        for f in self.slots:
            if len(f) != self.k or len(set(f)) != self.k:
                raise GridError(f"factor {f} must hold {self.k} distinct variables")
            if any(v < 0 for v in f):
                raise GridError(f"negative variable index in {f}")

    @classmethod
    def of(cls, factors: Sequence[Sequence[int]]) -> "FormAssignment":
        slots = tuple(tuple(sorted(f)) for f in factors)
        return cls(len(slots), len(slots[0]) if slots else 0, slots)

    @property
    def variables(self) -> list[int]:
        return sorted({v for f in self.slots for v in f})

    @property
    def r(self) -> int:
        return len(self.variables)

    def polynomial(self) -> SparsePoly:
        arity = max(self.variables) + 1
        out = SparsePoly.constant(arity, 1)
        for f in self.slots:
            out = out * SparsePoly.linear(arity, {v: 1 for v in f})
        return out


def max_monomial_coefficient(fa: FormAssignment, max_n: int = 12) -> int:
    """Largest coefficient of the expanded product."""
    if fa.n > max_n:
        raise BudgetExceeded("form expansion", fa.n, max_n)
    return max(fa.polynomial().terms.values())


def merge_variables(fa: FormAssignment) -> FormAssignment:
    """Repeatedly identify two variables that never share a factor.

    The smaller index survives; the result is relabeled to 0..r'-1 in order of
    first appearance and has every pair of its variables sharing a factor.
    """
    slots = [set(f) for f in fa.slots]
    while True:
        used = sorted(set().union(*slots)) if slots else []
        pair = next(((a, b) for a, b in combinations(used, 2)
                     if not any(a in f and b in f for f in slots)), None)
        if pair is None:
            break
        a, b = pair
        for f in slots:
            if b in f:
                f.discard(b)
                f.add(a)
    relabel: dict[int, int] = {}
    out = []
    for f in slots:
        for v in sorted(f):
            relabel.setdefault(v, len(relabel))
        out.append(tuple(sorted(relabel[v] for v in f)))
    return FormAssignment(fa.n, fa.k, tuple(out))


def _factor_candidates(k: int, used: int, r_max: int) -> list[tuple[int, ...]]:
    out = []
    for fresh in range(k + 1):
        if used + fresh > r_max:
            break
        new = tuple(range(used, used + fresh))
        for old in combinations(range(used), k - fresh):
            out.append(old + new)
    return sorted(out)


def iter_relabeling_classes(n: int, k: int, r_max: Optional[int] = None
                            ) -> Iterator[tuple[FormAssignment, dict]]:
    """Assignments covering every class under relabeling of c_1..c_r.

    Factor lists are generated in non-decreasing order with variables
    numbered by first appearance; the lexicographically least relabeled form
    of any assignment has both properties, so every class is reached (some
    more than once).  Yields each assignment with its expanded product as
    {exponent tuple: coefficient}, built incrementally along the search.
    """
    if k < 1 or n < 1:
        raise GridError(f"need n, k >= 1, got n={n}, k={k}")
    r_max = n * k if r_max is None else r_max
    if r_max < k:
        return
    cand_cache: dict[int, list] = {}
    prefix: list[tuple[int, ...]] = []

    def dfs(used: int, poly: dict) -> Iterator:
        if len(prefix) == n:
            yield FormAssignment(n, k, tuple(prefix)), poly
            return
        cands = cand_cache.get(used)
        if cands is None:
            cands = cand_cache[used] = _factor_candidates(k, used, r_max)
        last = prefix[-1] if prefix else None
        for f in cands:
            if last is not None and f < last:
                continue
            nxt: dict = {}
            for e, c in poly.items():
                for v in f:
                    e2 = e[:v] + (e[v] + 1,) + e[v + 1:]
                    nxt[e2] = nxt.get(e2, 0) + c
            prefix.append(f)
            yield from dfs(max(used, f[-1] + 1), nxt)
            prefix.pop()

    yield from dfs(0, {(0,) * r_max: 1})


@dataclass
class BoundReport:
    name: str
    params: dict
    checked: int = 0
    max_observed: int = 0
    bound: object = None
    passed: bool = True
    attained: bool = False
    maximizers: list = field(default_factory=list)
    maximizer_count: int = 0
    counterexample: Optional[tuple] = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"check": self.name, **self.params, "checked": self.checked,
                "max_observed": to_jsonable(self.max_observed), "bound": to_jsonable(self.bound),
                "pass": self.passed, "attained": self.attained,
                "maximizer_count": self.maximizer_count,
                "maximizers": [list(map(list, s)) for s in self.maximizers],
                "counterexample": to_jsonable(self.counterexample),
                **{k: to_jsonable(v) for k, v in self.extra.items()}}


def to_jsonable(x):
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    if isinstance(x, (tuple, list)):
        return [to_jsonable(v) for v in x]
    if hasattr(x, "_mpi_"):
        # interval -> [lower, upper] decimal strings
        lo, hi = x._mpi_
        return [libmp.to_str(lo, 22), libmp.to_str(hi, 22)]
    return str(x)


def _track(report: BoundReport, fa: FormAssignment, top: int):
    report.checked += 1
    if top > report.max_observed:
        report.max_observed = top
        report.maximizers = []
        report.maximizer_count = 0
    if top == report.max_observed:
        report.maximizer_count += 1
        if len(report.maximizers) < MAX_MAXIMIZERS:
            report.maximizers.append(fa.slots)


def check_two_term_bound(n: int, r: Optional[int] = None) -> BoundReport:
    """k = 2: every coefficient <= binom(n, ceil(n/2)) on every class.

    Raises BoundViolation on a counterexample.
    """
    bound = math.comb(n, (n + 1) // 2)
    report = BoundReport("lemma4", {"n": n, "k": 2, "r": r if r is not None else 2 * n}, bound=bound)
    for fa, poly in iter_relabeling_classes(n, 2, r):
        top = max(poly.values())
        _track(report, fa, top)
        if top > bound:
            report.passed = False
            report.counterexample = fa.slots
            raise BoundViolation(f"coefficient {top} > {bound} for {fa.slots}", fa.slots)
    report.attained = report.max_observed == bound
    return report


def many_term_bound(n: int, k: int, prec: int = DEFAULT_PREC):
    """C * k**(n+1) / n**(1/4) as an interval."""
    with precision(prec):
        return binomial_constant(prec) * iv.mpf(k) ** (n + 1) / iv.sqrt(iv.sqrt(iv.mpf(n)))


def check_many_term_bound(n: int, k: int, r: Optional[int] = None, prec: int = DEFAULT_PREC) -> BoundReport:
    """k >= 3: coefficients below C k^(n+1) / n^(1/4), plus the variable-count
    bound r' <= (1 + sqrt(1 + 4nk(k-1))) / 2 < sqrt(2 n k^2) after merging.
    """
    if k < 3:
        raise GridError(f"the many-term bound needs k >= 3, got {k}")
    bound = many_term_bound(n, k, prec)
    lower = bound.a
    disc = 1 + 4 * n * k * (k - 1)
    report = BoundReport("lemma6", {"n": n, "k": k, "r": r if r is not None else n * k}, bound=bound)
    max_merged_r = 0
    for fa, poly in iter_relabeling_classes(n, k, r):
        top = max(poly.values())
        _track(report, fa, top)
        if not top <= lower:
            report.passed = False
            report.counterexample = fa.slots
            raise BoundViolation(f"coefficient {top} exceeds {bound} for {fa.slots}", fa.slots)
        rm = merge_variables(fa).r
        max_merged_r = max(max_merged_r, rm)
        # r(r-1)/2 <= n k(k-1)/2, (2r-1)^2 <= disc, r^2 < 2 n k^2
        if not (rm * (rm - 1) <= n * k * (k - 1) and (2 * rm - 1) ** 2 <= disc
                and rm * rm < 2 * n * k * k):
            report.passed = False
            report.counterexample = fa.slots
            raise BoundViolation(f"merged variable count {rm} too large for {fa.slots}", fa.slots)
    report.extra["max_merged_r"] = max_merged_r
    report.extra["r_cap"] = f"sqrt({2 * n * k * k})"
    return report


def balanced_multinomial(n: int, k: int) -> int:
    q, rem = divmod(n, k)
    parts = [q + 1] * rem + [q] * (k - rem)
    return math.factorial(n) // math.prod(math.factorial(p) for p in parts)


def check_multinomial_conjecture(n: int, k: int, r: Optional[int] = None) -> BoundReport:
    """Look for a class whose largest coefficient beats the balanced multinomial.

    Never raises on a counterexample; it is returned in the report.
    """
    if k < 3:
        raise GridError(f"the multinomial conjecture is stated for k >= 3, got {k}")
    bound = balanced_multinomial(n, k)
    report = BoundReport("conjecture", {"n": n, "k": k, "r": r if r is not None else n * k}, bound=bound)
    for fa, poly in iter_relabeling_classes(n, k, r):
        top = max(poly.values())
        _track(report, fa, top)
        if top > bound and report.counterexample is None:
            report.passed = False
            report.counterexample = fa.slots
    report.attained = report.max_observed == bound
    report.extra["verdict"] = ("counterexample" if report.counterexample
                               else "no counterexample at this scale")
    return report


# ---------------------------------------------------------------------------
# binomial distribution inequality
# ---------------------------------------------------------------------------

def binomial_constant(prec: int = DEFAULT_PREC):
    """(3 / (2e))**(3/2) as an interval."""
    with precision(prec):
        return (iv.mpf(3) / (2 * iv.e)) ** (iv.mpf(3) / 2)


@dataclass(frozen=True)
class BinomialPoint:
    n: int
    a: int
    p: Fraction

    def __post_init__(self):
        if not (1 <= self.a <= self.n - 1):
            raise GridError(f"need 1 <= a <= n-1, got n={self.n}, a={self.a}")
        if not (0 < self.p < 1):
            raise GridError(f"need 0 < p < 1, got {self.p}")


def critical_p(n: int, a: int) -> Fraction:
    """Maximiser of p^(a+1/2) (1-p)^(n-a+1/2) on (0, 1)."""
    return Fraction(2 * a + 1, 2 * (n + 1))


def f_npa(point: BinomialPoint, prec: int = DEFAULT_PREC):
    """Interval enclosure of sqrt(n) binom(n,a) p^(a+1/2) (1-p)^(n-a+1/2)."""
    n, a = point.n, point.a
    p = Fraction(point.p)
    with precision(prec):
        pi = iv.mpf(p.numerator) / iv.mpf(p.denominator)
        qi = iv.mpf(p.denominator - p.numerator) / iv.mpf(p.denominator)
        return (iv.sqrt(iv.mpf(n) * pi * qi) * iv.mpf(math.comb(n, a))
                * pi ** a * qi ** (n - a))


def f_na(n: int, a: int, prec: int = DEFAULT_PREC):
    return f_npa(BinomialPoint(n, a, critical_p(n, a)), prec)


def check_binomial_inequality(n_max: int, p_grid_density: int = 16, grid_n_max: int = 40,
                              prec: int = DEFAULT_PREC, threshold: str = "0.409917"
                              ) -> BoundReport:
    """f(n, a) < C for every 1 <= a < n <= n_max, plus a p-grid sweep.

    The critical-point value must sit strictly below the lower endpoint of
    C's enclosure and below ``threshold``.  For n <= grid_n_max, every p = t /
    (p_grid_density + 1) must also satisfy f(n, a, p) <= f(n, a); there the
    check only fails when the intervals prove the opposite.
    """
    C = binomial_constant(prec)
    with precision(prec):
        thr = iv.mpf(threshold)
    report = BoundReport("binom", {"n_max": n_max, "grid": p_grid_density}, bound=C)
    best = None
    best_at = None
    f_n1 = []
    for n in range(2, n_max + 1):
        for a in range(1, n):
            val = f_na(n, a, prec)
            report.checked += 1
            if not (val.b < C.a and val.b < thr.a):
                report.passed = False
                report.counterexample = (n, a)
                raise BoundViolation(f"f({n},{a}) = {val} not below C", (n, a))
            if best is None or val.a > best.b:
                best, best_at = val, (n, a)
            if a == 1:
                f_n1.append(val)
            if n <= grid_n_max:
                for t in range(1, p_grid_density + 1):
                    fp = f_npa(BinomialPoint(n, a, Fraction(t, p_grid_density + 1)), prec)
                    report.extra["grid_points"] = report.extra.get("grid_points", 0) + 1
                    if fp.a > val.b:
                        report.passed = False
                        report.counterexample = (n, a, t)
                        raise BoundViolation(f"f({n},{a},p) above critical value", (n, a, t))
    report.max_observed = best
    report.extra["argmax"] = best_at
    report.extra["f_n1_increasing"] = all(x.b < y.a for x, y in zip(f_n1, f_n1[1:]))
    if f_n1:
        with precision(prec):
            report.extra["gap_to_C_at_n_max"] = C - f_n1[-1]
    return report


def x_of(a, prec: int = DEFAULT_PREC):
    """log(a + 1/2) + a log a - (a + 1) log(a + 1)."""
    with precision(prec):
        a = iv.mpf(a)
        return iv.log(a + iv.mpf(1) / 2) + a * iv.log(a) - (a + 1) * iv.log(a + 1)


def y_of(n, prec: int = DEFAULT_PREC):
    """log f(n, 1), the log of the a = 1 critical value."""
    with precision(prec):
        n = iv.mpf(n)
        half = iv.mpf(1) / 2
        three_halves = iv.mpf(3) / 2
        return (three_halves * iv.log(three_halves) + three_halves * iv.log(n)
                + (n - half) * iv.log(n - half) - (n + 1) * iv.log(n + 1))


def y_limit(prec: int = DEFAULT_PREC):
    with precision(prec):
        three_halves = iv.mpf(3) / 2
        return three_halves * iv.log(three_halves) - three_halves


def check_log_monotonicity(n_max: int, far: int = 10**6, prec: int = DEFAULT_PREC) -> BoundReport:
    """x(a) strictly decreasing on 1..n_max, y(n) strictly increasing on
    2..n_max and below its limit, and |x(far) + 1| < 1e-5."""
    report = BoundReport("monotone", {"n_max": n_max}, bound=y_limit(prec))
    lim = report.bound
    prev = x_of(1, prec)
    for a in range(2, n_max + 1):
        cur = x_of(a, prec)
        report.checked += 1
        if not cur.b < prev.a:
            report.passed = False
            raise BoundViolation(f"x not decreasing at a={a}", ("x", a))
        prev = cur
    prev = y_of(2, prec)
    for n in range(2, n_max + 1):
        cur = y_of(n, prec) if n > 2 else prev
        report.checked += 1
        if n > 2 and not prev.b < cur.a:
            report.passed = False
            raise BoundViolation(f"y not increasing at n={n}", ("y", n))
        if not cur.b < lim.a:
            report.passed = False
            raise BoundViolation(f"y({n}) not below its limit", ("y-limit", n))
        prev = cur
    tail = x_of(far, prec) + 1
    with precision(prec):
        eps = iv.mpf("1e-5")
    if not (abs(tail).b < eps.a):
        report.passed = False
        raise BoundViolation(f"|x({far}) + 1| = {tail} not below 1e-5", ("x-limit", far))
    report.extra["x_far_plus_1"] = tail
    return report


# names used by the command line and external callers
check_lemma4 = check_two_term_bound
check_lemma6 = check_many_term_bound
lemma6_bound = many_term_bound
check_appendix_monotonicity = check_log_monotonicity
