import random

import pytest

from rookdist.constructor import (AdmissibleCount, ConstructionPlan, Policy, Status, Strategy,
                                  a_colorings, admissible_colorings_count, binary_template,
                                  check_construction, choose_A, classify_columns, color_A,
                                  greedy_phase2, prefix_width, solve)
from rookdist.corpus import random_list_assignment
from rookdist.errors import BudgetExceeded, GridError, PlanExhausted
from rookdist.grid import Coloring, GridSpec, ListAssignment, column_pattern
from rookdist.oracle import is_distinguishing, list_distinguishing_exhaustive


def columns_to_lists(cols):
    """List assignment from per-column lists of per-row lists."""
    n = len(cols[0])
    return ListAssignment.from_rows([[cols[j][i] for j in range(len(cols))] for i in range(n)])


def test_classify_examples():
    L = columns_to_lists([[[1, 2], [1, 2]], [[1, 2], [1, 3]], [[4], [4]]])
    a, b, c = classify_columns(L)
    assert a.list_uniform and a.column_list_union == {1, 2}
    assert not b.list_uniform and b.column_list_union == {1, 2, 3}
    assert c.list_uniform and c.min_list_size == 1


def test_all_uniform_columns_form_A():
    L = ListAssignment.uniform(GridSpec(2, 4), [1, 2])
    plan = choose_A(classify_columns(L), 2)
    assert plan.A == (1, 2, 3, 4)
    assert plan.a_coloring_strategy is Strategy.FIXED_2COLORING
    assert plan.phase2_order == ()


def test_no_uniform_columns_top_up_lowest():
    L = columns_to_lists([[[1, 2], [1, 3]]] * 4)
    plan = choose_A(classify_columns(L), 2)
    assert plan.A == (1, 2, 3) and plan.a_coloring_strategy is Strategy.NULLSTELLENSATZ
    assert plan.phase2_order == (4,)


def test_uniform_columns_first_then_lowest_index():
    uni, mixed = [[1, 2]] * 3, [[1, 2], [1, 3], [2, 3]]
    L = columns_to_lists([mixed, uni, mixed, uni, mixed])
    plan = choose_A(classify_columns(L), 3)
    assert plan.A == (2, 4, 1, 3)
    assert plan.a_coloring_strategy is Strategy.NULLSTELLENSATZ
    assert plan.phase2_order == (5,)


def test_choose_A_needs_more_columns_than_rows():
    L = ListAssignment.uniform(GridSpec(2, 3), [1, 2])
    with pytest.raises(GridError):
        choose_A(classify_columns(L), 3)


def test_singleton_lists_force_backtracking():
    L = columns_to_lists([[[1], [2]], [[1, 2], [1, 3]], [[1, 2], [2, 3]]])
    assert choose_A(classify_columns(L), 2).a_coloring_strategy is Strategy.BACKTRACK


def test_prefix_policy():
    assert prefix_width(2) == 9
    assert prefix_width(1) == 0
    L = ListAssignment.uniform(GridSpec(2, 6), [0, 1, 2])
    plan = choose_A(classify_columns(L), 2, Policy.PREFIX)
    assert plan.A == (1, 2, 3, 4, 5, 6)
    plan = choose_A(classify_columns(L), 2, "prefix", width=3)
    assert plan.A == (1, 2, 3) and plan.a_coloring_strategy is Strategy.NULLSTELLENSATZ
    plan = choose_A(classify_columns(L), 2, "prefix", width=1)
    assert plan.A == (1, 2, 3)


def test_color_A_cn_case():
    L = ListAssignment.uniform(GridSpec(2, 3), [1, 2])
    plan = ConstructionPlan((1, 2, 3), Strategy.NULLSTELLENSATZ, ())
    c = color_A(L, plan)
    assert is_distinguishing(c).verdict and L.admits(c)


def test_color_A_single_row_uses_min_and_max():
    L = columns_to_lists([[[1, 2]], [[3, 4]]])
    plan = choose_A(classify_columns(L), 1)
    assert plan.a_coloring_strategy is Strategy.FIXED_2COLORING
    assert color_A(L, plan).cells == ((1, 4),)


def test_color_A_uniform_template():
    L = ListAssignment.uniform(GridSpec(2, 3), [5, 9])
    plan = choose_A(classify_columns(L), 2)
    c = color_A(L, plan)
    assert c.colors() <= {5, 9} and is_distinguishing(c).verdict


def test_binary_template_prefers_two_colored_columns():
    cols = binary_template(3, 4)
    assert cols and all(len(set(v)) == 2 for v in cols)
    # only two non-monochromatic vectors exist for n = 2
    cols = binary_template(2, 3)
    assert cols and any(len(set(v)) == 1 for v in cols)
    assert binary_template(2, 4) == ()


def test_admissible_count_examples():
    L = ListAssignment.uniform(GridSpec(2, 3), [1, 2])
    assert admissible_colorings_count(L, 1, [{1: 1, 2: 1}]) == AdmissibleCount(2, True)
    assert admissible_colorings_count(L, 1, []) == AdmissibleCount(4, True)
    every = [{1: 2}, {2: 2}, {1: 1, 2: 1}]
    assert admissible_colorings_count(L, 1, every).value == 0


def test_admissible_count_sampling_over_budget():
    L = ListAssignment.uniform(GridSpec(6, 7), range(6))
    est = admissible_colorings_count(L, 1, [], budget=10, samples=500, seed=1)
    assert not est.exact and est.value == 6**6
    again = admissible_colorings_count(L, 1, [((0, 6),)], budget=10, samples=500, seed=1)
    assert again == admissible_colorings_count(L, 1, [((0, 6),)], budget=10, samples=500, seed=1)


def test_phase2_fails_with_two_colors_on_two_by_four():
    L = ListAssignment.uniform(GridSpec(2, 4), [1, 2])
    plan = ConstructionPlan((1, 2, 3), Strategy.NULLSTELLENSATZ, (4,))
    partial = Coloring.from_columns([(1, 1), (1, 2), (2, 2)])
    with pytest.raises(PlanExhausted):
        greedy_phase2(L, plan, partial)
    for p in a_colorings(L, plan):
        with pytest.raises(PlanExhausted):
            greedy_phase2(L, plan, p)
    res = solve(L)
    assert res.status is Status.NONEXISTENT and res.route == "oracle"
    with pytest.raises(PlanExhausted):
        solve(L, fallback=False)


def test_phase2_with_three_colors():
    L = ListAssignment.uniform(GridSpec(2, 4), [1, 2, 3])
    res = solve(L)
    assert res.status is Status.FOUND and res.certificate.verdict
    plan = ConstructionPlan((1, 2, 3), Strategy.NULLSTELLENSATZ, (4,))
    c = greedy_phase2(L, plan, color_A(L, plan))
    assert all(check_construction(L, plan, c).values())


def test_phase2_rejects_wrong_partial():
    L = ListAssignment.uniform(GridSpec(2, 4), [1, 2, 3])
    plan = ConstructionPlan((1, 2, 3), Strategy.NULLSTELLENSATZ, (4,))
    with pytest.raises(GridError):
        greedy_phase2(L, plan, Coloring.from_columns([(1, 1), (1, 2), (2, 2), (3, 3)]))


def test_two_colors_on_two_by_three():
    res = solve(ListAssignment.uniform(GridSpec(2, 3), [1, 2]))
    assert res.status is Status.FOUND and res.route == "constructor"


def test_m_equals_n_plus_one_always_constructs():
    rng = random.Random(2)
    for t in range(300):
        n = 1 + t % 4
        L = random_list_assignment(rng, n, n + 1, rng.randint(2, 3), 6)
        res = solve(L, budget=10**7)
        assert res.status is Status.FOUND and res.route == "constructor"
        assert all(check_construction(L, res.plan, res.coloring).values())


def test_matches_exhaustive_oracle_on_two_by_five():
    for seed in range(150):
        rng = random.Random(seed)
        L = random_list_assignment(rng, 2, 5, 2, rng.randint(2, 4))
        res = solve(L)
        truth = list_distinguishing_exhaustive(L)
        assert (res.status is Status.FOUND) == (truth is not None)
        if res.status is Status.FOUND:
            checks = check_construction(L, res.plan, res.coloring)
            assert checks["in_lists"] and checks["distinguishing"]
            if res.route == "constructor":
                assert all(checks.values())


def test_forced_duplicate_columns_have_no_coloring():
    res = solve(ListAssignment.from_rows([[[1], [1]]]))
    assert res.status is Status.NONEXISTENT


def test_refusal_is_not_nonexistence():
    L = ListAssignment.uniform(GridSpec(3, 9), [0, 1])
    res = solve(L, budget=100)
    assert res.status is Status.REFUSED
    with pytest.raises(BudgetExceeded):
        list_distinguishing_exhaustive(L, 100)


def test_patterns_avoid_A_and_vectors_distinct():
    rng = random.Random(4)
    built = 0
    for _ in range(100):
        L = random_list_assignment(rng, 3, 6, 3, 5, "mixed")
        res = solve(L)
        if res.route != "constructor":
            continue
        built += 1
        a_pats = {column_pattern(res.coloring, j) for j in res.plan.A}
        rest = res.plan.phase2_order
        assert all(column_pattern(res.coloring, j) not in a_pats for j in rest)
        assert len({res.coloring.column(j) for j in rest}) == len(rest)
    assert built > 50


def test_deterministic():
    rng = random.Random(8)
    L = random_list_assignment(rng, 3, 5, 2, 4, "no-uniform")
    first = solve(L)
    second = solve(L)
    assert first.to_json(True) == second.to_json(True)


def test_to_json_shape():
    res = solve(ListAssignment.uniform(GridSpec(2, 3), [1, 2]))
    out = res.to_json(emit_certificate=True)
    assert out["status"] == "found" and out["certificate"] == {"verdict": True}
    assert Coloring.from_json(out["coloring"]) == res.coloring
