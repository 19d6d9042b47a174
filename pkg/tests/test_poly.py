import math
import random
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rookdist.corpus import random_list_assignment
from rookdist.errors import BudgetExceeded, GridError
from rookdist.grid import Coloring, GridSpec, ListAssignment
from rookdist.oracle import is_distinguishing
from rookdist.poly import (CnInstance, SparsePoly, all_assignments, build_C, build_F, build_R,
                           closed_form_coefficient, cn_list_coloring, evaluate_F, induced_coloring,
                           poly_add, poly_mul, target_coefficient)

x = SparsePoly.variable(2, 0)
y = SparsePoly.variable(2, 1)


def test_ring_examples():
    assert (x + y) * (x - y) == x * x - y * y
    assert len((x + y) * SparsePoly(2)) == 0
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert poly_add(x, y) == x + y and poly_mul(x, y) == x * y
    assert not (x - x)


def test_arity_mismatch():
    with pytest.raises(GridError):
        x * SparsePoly.variable(3, 0)
    with pytest.raises(GridError):
        SparsePoly(2, {(1,): 1})


polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                        st.integers(-5, 5), max_size=6).map(lambda t: SparsePoly(2, t))


@settings(max_examples=150, deadline=None)
@given(polys, polys, polys, st.tuples(st.integers(-4, 4), st.integers(-4, 4)))
def test_ring_laws_and_evaluation(p, q, r, pt):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert all(coeff != 0 for coeff in (p * q).terms.values())
    assert (p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt)
    assert (p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt)


def test_bounded_multiplication_keeps_divisors():
    bound = (1, 1)
    full = (x + y + 1) ** 3
    cut = (x + y + 1).mul((x + y + 1).mul(x + y + 1, bound=bound), bound=bound)
    assert cut.coefficient((1, 1)) == full.coefficient((1, 1))
    assert all(e[0] <= 1 and e[1] <= 1 for e in cut.terms)


def test_base_case_polynomials():
    inst = CnInstance(1)
    C = build_C(1)
    assert C == SparsePoly.variable(2, inst.slot(1, 2)) - SparsePoly.variable(2, inst.slot(1, 1))
    assert build_R(1) == SparsePoly.constant(2, 1)


def test_two_row_polynomials():
    inst = CnInstance(2)
    R = build_R(2)
    assert R == (SparsePoly.variable(6, inst.slot(2, 1)) - SparsePoly.variable(6, inst.slot(1, 1)))
    assert build_C(2).degree == 3
    assert build_F(2).degree == 4 == inst.degree


@pytest.mark.parametrize("n", range(1, 7))
def test_structure_without_expansion(n):
    inst = CnInstance(n)
    assert inst.arity == n * (n + 1)
    assert inst.degree == n * n
    assert len(inst.column_factors()) == math.comb(n + 1, 2)
    assert len(inst.row_factors()) == math.comb(n, 2)
    assert sum(inst.target_monomial()) == n * n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_full_expansion_degree(n):
    F = build_F(n)
    assert F.degree == n * n
    assert all(sum(e) == n * n for e in F.terms)


@pytest.mark.parametrize("n,value", [(1, 1), (2, 2), (3, 12), (4, 288)])
def test_target_coefficient(n, value):
    assert target_coefficient(n) == value == closed_form_coefficient(n)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_truncated_expansion_matches_full(n):
    assert target_coefficient(n, full=True) == target_coefficient(n, full=False)


def test_closed_form_values():
    assert closed_form_coefficient(1) == 1
    assert closed_form_coefficient(4) == 288
    assert closed_form_coefficient(5) == 34560


def test_target_coefficient_budget():
    with pytest.raises(BudgetExceeded):
        target_coefficient(5)


def test_evaluate_F_zero_cases():
    # columns 1 and 2 both sum to 3
    assert evaluate_F(2, [[1, 2, 0], [2, 1, 5]]) == 0
    # x(2,1) == x(1,1)
    assert evaluate_F(2, [[4, 1, 9], [4, 2, 0]]) == 0


def test_evaluate_F_nonzero_certifies():
    rows = [[0, 1, 1], [1, 1, 2]]  # column sums 1, 2, 3; x(1,1) != x(2,1)
    assignment = {(i, j): rows[i - 1][j - 1] for i in (1, 2) for j in (1, 2, 3)}
    assert evaluate_F(2, assignment) != 0
    assert is_distinguishing(induced_coloring(2, assignment)).verdict


@pytest.mark.parametrize("n", [1, 2, 3])
def test_factored_evaluation_matches_expansion(n):
    F = build_F(n)
    inst = CnInstance(n)
    rng = random.Random(n)
    for _ in range(50):
        rows = [[rng.randint(-3, 3) for _ in range(n + 1)] for _ in range(n)]
        point = [0] * inst.arity
        for i in range(1, n + 1):
            for j in range(1, n + 2):
                point[inst.slot(i, j)] = rows[i - 1][j - 1]
        assert F.evaluate(point) == evaluate_F(n, rows)


@pytest.mark.parametrize("n,universe", [(2, 3), (3, 2)])
def test_nonzero_F_implies_distinguishing(n, universe):
    grid = GridSpec(n, n + 1)
    L = ListAssignment.uniform(grid, range(universe))
    nonzero = 0
    for c in all_assignments(L):
        if evaluate_F(n, c) != 0:
            nonzero += 1
            assert is_distinguishing(c).verdict
    assert nonzero > 0


def test_nonzero_F_on_random_assignments():
    rng = random.Random(11)
    for n in (2, 3):
        for _ in range(2000):
            rows = [[rng.randrange(6) for _ in range(n + 1)] for _ in range(n)]
            if evaluate_F(n, rows) != 0:
                assert is_distinguishing(Coloring.from_rows(rows)).verdict


def test_cn_single_row():
    c = cn_list_coloring(ListAssignment.uniform(GridSpec(1, 2), [1, 2]))
    assert c(1, 1) != c(1, 2)


def test_cn_two_rows_uniform():
    c = cn_list_coloring(ListAssignment.uniform(GridSpec(2, 3), [1, 2]))
    assert len(set(c.columns())) == 3
    assert evaluate_F(2, c) != 0 and is_distinguishing(c).verdict


def test_cn_random_two_lists():
    rng = random.Random(5)
    for _ in range(1000):
        L = random_list_assignment(rng, 2, 3, 2, 5)
        c = cn_list_coloring(L)
        assert L.admits(c) and evaluate_F(2, c) != 0 and is_distinguishing(c).verdict


def test_cn_truncates_long_lists():
    L = ListAssignment.uniform(GridSpec(2, 3), [7, 3, 9, 1])
    c = cn_list_coloring(L)
    assert c.colors() <= {1, 3}


def test_cn_preconditions():
    with pytest.raises(GridError):
        cn_list_coloring(ListAssignment.uniform(GridSpec(2, 4), [1, 2]))
    with pytest.raises(GridError):
        cn_list_coloring(ListAssignment.from_rows([[[1], [1, 2]]]))


def test_cn_is_deterministic():
    rng = random.Random(9)
    L = random_list_assignment(rng, 3, 4, 2, 6)
    assert cn_list_coloring(L) == cn_list_coloring(L)
