"""Sparse integer polynomials and the Nullstellensatz certificate for K_n x K_{n+1}.

Variables x(i, j), i in 1..n, j in 1..n+1, one per vertex, occupy slot
(i-1)*(n+1) + (j-1).  The certificate polynomial is F = C * R with

    C(i, j) = sum_k x(k, j) - sum_k x(k, i)       1 <= i < j <= n+1
    R(h, l) = x(l, h) - x(h, h)                   1 <= h < l <= n

A nonzero value of F at an L-coloring means every pair of columns has
different color sums (hence different patterns) and rows are separated one
by one along the diagonal, so the coloring is distinguishing.  The
coefficient of the off-diagonal monomial prod_{i != j} x(i, j) in F is
prod_{r=1..n} r!, which with lists of size 2 guarantees such a coloring.
"""

from __future__ import annotations

import math
from collections.abc import Mapping
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import BudgetExceeded, GridError
from .grid import Coloring, GridSpec, ListAssignment

Exponents = tuple[int, ...]

EXPANSION_BUDGET = 2_000_000


class SparsePoly:
    """Polynomial over Z stored as {exponent vector: coefficient}.

    Zero coefficients are never stored, so the zero polynomial has no terms.
    """

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Optional[Mapping[Exponents, int]] = None):
        self.arity = arity
        self.terms: dict[Exponents, int] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != arity:
                raise GridError(f"exponent vector {exps} does not have arity {arity}")
            if any(e < 0 for e in exps):
                raise GridError(f"negative exponent in {exps}")
            if coeff:
                self.terms[exps] = self.terms.get(exps, 0) + coeff
                if not self.terms[exps]:
                    del self.terms[exps]

    @classmethod
    def constant(cls, arity: int, value: int) -> "SparsePoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, arity: int, index: int) -> "SparsePoly":
        exps = [0] * arity
        exps[index] = 1
        return cls(arity, {tuple(exps): 1})

    @classmethod
    def linear(cls, arity: int, coeffs: Mapping[int, int]) -> "SparsePoly":
        """Homogeneous linear form sum coeffs[v] * x_v."""
        terms = {}
        for v, a in coeffs.items():
            exps = [0] * arity
            exps[v] = 1
            terms[tuple(exps)] = a
        return cls(arity, terms)

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, int):
            return SparsePoly.constant(self.arity, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        if other.arity != self.arity:
            raise GridError(f"arity mismatch: {self.arity} vs {other.arity}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return _raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self):
        return _raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.mul(other)

    __rmul__ = __mul__

    def mul(self, other: "SparsePoly", bound: Optional[Exponents] = None,
            max_terms: int = EXPANSION_BUDGET) -> "SparsePoly":
        """Product, optionally keeping only monomials dividing x^bound.

        Dropping monomials that do not divide x^bound is exact for every
        coefficient that survives: no product of dropped terms can come back
        below the bound since exponents only grow.
        """
        other = self._coerce(other)
        out: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if bound is not None and any(x > b for x, b in zip(e, bound)):
                    continue
                out[e] = out.get(e, 0) + c1 * c2
            if len(out) > max_terms:
                raise BudgetExceeded("polynomial expansion", len(out), max_terms)
        return _raw(self.arity, {e: c for e, c in out.items() if c})

    def __pow__(self, k: int):
        out = SparsePoly.constant(self.arity, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = SparsePoly.constant(self.arity, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{v}" + (f"^{p}" if p > 1 else "") for v, p in enumerate(e) if p)
            parts.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    def coefficient(self, exps: Sequence[int]) -> int:
        return self.terms.get(tuple(exps), 0)

    @property
    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def evaluate(self, point: Sequence[int]) -> int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, p in zip(point, e):
                if p:
                    term *= x**p
            total += term
        return total


def _raw(arity: int, terms: dict) -> SparsePoly:
    p = SparsePoly.__new__(SparsePoly)
    p.arity = arity
    p.terms = terms
    return p


def poly_add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p + q


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    return p * q


def product_of(factors: Iterable[SparsePoly], arity: int, bound: Optional[Exponents] = None,
               max_terms: int = EXPANSION_BUDGET) -> SparsePoly:
    out = SparsePoly.constant(arity, 1)
    for f in factors:
        out = out.mul(f, bound=bound, max_terms=max_terms)
    return out


@dataclass(frozen=True)
class CnInstance:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GridError(f"need n >= 1, got {self.n}")

    @property
    def arity(self) -> int:
        return self.n * (self.n + 1)

    @property
    def degree(self) -> int:
        """deg C + deg R, read off the linear factors without expanding."""
        return math.comb(self.n + 1, 2) + math.comb(self.n, 2)

    def slot(self, i: int, j: int) -> int:
        if not (1 <= i <= self.n and 1 <= j <= self.n + 1):
            raise GridError(f"no variable x({i},{j}) for n={self.n}")
        return (i - 1) * (self.n + 1) + (j - 1)

    def column_factor(self, i: int, j: int) -> SparsePoly:
        coeffs = {self.slot(k, j): 1 for k in range(1, self.n + 1)}
        for k in range(1, self.n + 1):
            coeffs[self.slot(k, i)] = -1
        return SparsePoly.linear(self.arity, coeffs)

    def row_factor(self, h: int, l: int) -> SparsePoly:
        return SparsePoly.linear(self.arity, {self.slot(l, h): 1, self.slot(h, h): -1})

    def column_factors(self) -> list[SparsePoly]:
        return [self.column_factor(i, j)
                for i in range(1, self.n + 2) for j in range(i + 1, self.n + 2)]

    def row_factors(self) -> list[SparsePoly]:
        return [self.row_factor(h, l)
                for h in range(1, self.n + 1) for l in range(h + 1, self.n + 1)]

    def target_monomial(self) -> Exponents:
        """Exponent vector of prod_{i != j} x(i, j)."""
        e = [0] * self.arity
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 2):
                if i != j:
                    e[self.slot(i, j)] = 1
        return tuple(e)


def build_C(n: int, bound: Optional[Exponents] = None,
            max_terms: int = EXPANSION_BUDGET) -> SparsePoly:
    inst = CnInstance(n)
    return product_of(inst.column_factors(), inst.arity, bound, max_terms)


def build_R(n: int, bound: Optional[Exponents] = None,
            max_terms: int = EXPANSION_BUDGET) -> SparsePoly:
    inst = CnInstance(n)
    return product_of(inst.row_factors(), inst.arity, bound, max_terms)


def build_F(n: int, bound: Optional[Exponents] = None,
            max_terms: int = EXPANSION_BUDGET) -> SparsePoly:
    inst = CnInstance(n)
    return product_of(inst.column_factors() + inst.row_factors(), inst.arity, bound, max_terms)


def target_coefficient(n: int, max_n: int = 4, full: Optional[bool] = None,
                       max_terms: int = EXPANSION_BUDGET) -> int:
    """Coefficient of the off-diagonal monomial in F, by symbolic expansion.

    ``full=True`` expands F completely.  Otherwise monomials that do not
    divide the target are discarded during the expansion, which leaves the
    target coefficient unchanged (the default for n >= 4, where the complete
    expansion of C alone has tens of millions of terms).
    """
    if n > max_n:
        raise BudgetExceeded(f"target coefficient expansion for n={n}", n, max_n)
    inst = CnInstance(n)
    target = inst.target_monomial()
    if full is None:
        full = n <= 3
    F = build_F(n, bound=None if full else target, max_terms=max_terms)
    return F.coefficient(target)


def closed_form_coefficient(n: int) -> int:
    return math.prod(math.factorial(r) for r in range(1, n + 1))


def _rows_of(n: int, assignment) -> list[list[int]]:
    if isinstance(assignment, Coloring):
        rows = [list(r) for r in assignment.cells]
    elif isinstance(assignment, Mapping):
        rows = [[assignment[(i, j)] for j in range(1, n + 2)] for i in range(1, n + 1)]
    else:
        rows = [list(r) for r in assignment]
    if len(rows) != n or any(len(r) != n + 1 for r in rows):
        raise GridError(f"assignment must cover an {n}x{n + 1} grid")
    return rows


def evaluate_F(n: int, assignment) -> int:
    """F at an assignment, as the product of its factor values.

    ``assignment`` is a Coloring, a mapping (i, j) -> int (1-based), or
    n rows of n+1 ints.
    """
    x = _rows_of(n, assignment)
    sums = [sum(x[k][j] for k in range(n)) for j in range(n + 1)]
    value = 1
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            value *= sums[j] - sums[i]
    for h in range(n):
        for l in range(h + 1, n):
            value *= x[l][h] - x[h][h]
    return value


def _cn_order(n: int) -> list[tuple[int, int]]:
    """Cells (0-based) in search order: the cells feeding R first, column by
    column, then the rest of each column in ascending column order."""
    first = [(i, h) for h in range(n - 1) for i in range(h, n)]
    taken = set(first)
    rest = [(i, j) for j in range(n + 1) for i in range(n) if (i, j) not in taken]
    return first + rest


def cn_list_coloring(L: ListAssignment) -> Coloring:
    """Distinguishing L-coloring of K_n x K_{n+1} with F != 0.

    Each list is cut to its two smallest colors.  The search is a
    depth-first walk over the cells (order of :func:`_cn_order`); a row
    factor is checked as soon as both its cells are set, a column factor as
    soon as both its columns are complete.  The first assignment found in
    that order is returned, so the result is deterministic.
    """
    grid = L.grid
    n = grid.n
    if grid.m != n + 1:
        raise GridError(f"cn_list_coloring needs m = n + 1, got {grid.n}x{grid.m}")
    if L.min_list_size() < 2:
        raise GridError("cn_list_coloring needs every list to have at least 2 colors")
    lists = [[L.lists[i][j][:2] for j in range(n + 1)] for i in range(n)]

    order = _cn_order(n)
    # remaining[j] counts unset cells of column j; when it reaches 0 the
    # column is complete
    remaining = [n] * (n + 1)
    x = [[0] * (n + 1) for _ in range(n)]
    sums = [0] * (n + 1)
    done: list[int] = []

    def ok_row(i: int, j: int) -> bool:
        # R(h, l) = x(l, h) - x(h, h) lives in column h < n; the order sets
        # the diagonal cell of that column before the cells below it
        return not (i > j and j < n - 1) or x[i][j] != x[j][j]

    def dfs(pos: int) -> bool:
        if pos == len(order):
            return True
        i, j = order[pos]
        for color in lists[i][j]:
            x[i][j] = color
            if ok_row(i, j):
                sums[j] += color
                remaining[j] -= 1
                completed = remaining[j] == 0
                good = True
                if completed:
                    good = all(sums[j] != sums[d] for d in done)
                    if good:
                        done.append(j)
                if good and dfs(pos + 1):
                    return True
                if completed and good:
                    done.pop()
                remaining[j] += 1
                sums[j] -= color
        return False

    if not dfs(0):
        # unreachable: the coefficient identity forces a solution
        raise AssertionError(f"no nonzero valuation of F for lists {L.lists}")
    c = Coloring(grid, tuple(tuple(r) for r in x))
    assert evaluate_F(n, c) != 0
    return c


def induced_coloring(n: int, assignment) -> Coloring:
    return Coloring(GridSpec(n, n + 1), tuple(tuple(r) for r in _rows_of(n, assignment)))


def all_assignments(L: ListAssignment):
    """Every L-coloring, row-major lexicographic."""
    cells = [L.lists[i][j] for i in range(L.grid.n) for j in range(L.grid.m)]
    m = L.grid.m
    for flat in product(*cells):
        yield Coloring(L.grid, tuple(tuple(flat[r * m:(r + 1) * m]) for r in range(L.grid.n)))
