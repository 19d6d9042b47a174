import random

import pytest

from rookdist.constructor import Status, solve
from rookdist.errors import GridError, Indeterminate
from rookdist.exact import (Resolution, band, borderline_m, ceil_log, distinguishing_number)
from rookdist.grid import GridSpec, ListAssignment
from rookdist.oracle import min_distinguishing_number


@pytest.mark.parametrize("n,m,k", [(2, 3, 2), (2, 9, 3), (3, 9, 3), (1, 2, 2), (1, 7, 7), (2, 10, 4)])
def test_band_examples(n, m, k):
    assert band(n, m) == k


def _in_band(n, m, k):
    return (k - 1) ** n < m <= k**n


def test_band_exhaustive_small_m():
    for n in range(1, 21):
        for m in range(2, 5001):
            assert _in_band(n, m, band(n, m))


def test_band_at_power_boundaries_up_to_a_million():
    for n in range(2, 21):
        k = 2
        while k**n <= 10**6:
            for m in (k**n - 1, k**n, k**n + 1):
                if 2 <= m <= 10**6:
                    assert _in_band(n, m, band(n, m))
            k += 1


def test_band_random_points():
    rng = random.Random(7)
    for _ in range(20000):
        n, m = rng.randint(1, 20), rng.randint(2, 10**6)
        assert _in_band(n, m, band(n, m))


def test_band_huge_exact():
    n = 40
    m = 3**40 + 1
    assert band(n, m) == 4
    assert band(n, 3**40) == 3


def test_band_rejects_bad_input():
    with pytest.raises(GridError):
        band(0, 5)
    with pytest.raises(GridError):
        band(2, 1)


@pytest.mark.parametrize("base,x,t", [(2, 1, 0), (2, 2, 1), (2, 3, 2), (2, 4, 2), (3, 10, 3), (10, 10**20, 20),
                                      (10, 10**20 + 1, 21)])
def test_ceil_log_exact(base, x, t):
    assert ceil_log(base, x) == t


def test_ceil_log_rejects_bad_base():
    with pytest.raises(ValueError):
        ceil_log(1, 5)


def test_two_by_four_is_above_the_band():
    res = distinguishing_number(2, 4)
    assert (res.k_band, res.value, res.borderline, res.resolution) == (2, 3, False, Resolution.FORMULA)


def test_two_by_three_borderline_resolved_by_search():
    res = distinguishing_number(2, 3)
    assert borderline_m(2, 2) == 3
    assert (res.value, res.borderline, res.resolution) == (2, True, Resolution.SEARCH)
    assert res.to_json() == {"k_band": 2, "value": 2, "borderline": True, "resolution": "search"}


def test_four_by_five_formula():
    res = distinguishing_number(4, 5)
    assert (res.value, res.resolution) == (2, Resolution.FORMULA)


def test_value_is_band_or_next():
    for m in range(2, 60):
        for n in range(1, min(m, 8)):
            try:
                res = distinguishing_number(n, m, search_budget=10**5)
            except Indeterminate as exc:
                assert exc.candidates == (band(n, m), band(n, m) + 1)
                continue
            assert res.value in (res.k_band, res.k_band + 1)
            if res.borderline:
                assert m == borderline_m(n, res.k_band)


def test_formula_matches_exhaustive_minimum():
    for m in range(2, 7):
        for n in range(1, m):
            assert distinguishing_number(n, m).value == min_distinguishing_number(GridSpec(n, m))[0]


def test_borderline_budget_gives_indeterminate():
    with pytest.raises(Indeterminate) as info:
        distinguishing_number(3, 6, search_budget=5)
    assert info.value.candidates == (2, 3)


def test_constant_lists_of_size_D_admit_a_coloring():
    for m in range(2, 6):
        for n in range(1, m):
            k = distinguishing_number(n, m).value
            L = ListAssignment.uniform(GridSpec(n, m), range(k))
            res = solve(L, budget=2 * 10**6)
            assert res.status is Status.FOUND
