import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rookdist.errors import GridError, UnsupportedGrid
from rookdist.grid import (Automorphism, Coloring, GridSpec, ListAssignment, apply_automorphism,
                           canonicalize_colors, column_pattern, column_vector, intern_labels,
                           pattern_of, row_permutations)


@st.composite
def grid_and_coloring(draw, max_n=4, max_m=5, colors=3):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(n + 1, max(n + 1, max_m)))
    cells = draw(st.lists(st.lists(st.integers(0, colors - 1), min_size=m, max_size=m),
                          min_size=n, max_size=n))
    return Coloring.from_rows(cells)


@st.composite
def automorphism_for(draw, c):
    sigma = draw(st.permutations(range(1, c.grid.n + 1)))
    tau = draw(st.permutations(range(1, c.grid.m + 1)))
    return Automorphism(tuple(sigma), tuple(tau))


@st.composite
def coloring_with_two_automorphisms(draw):
    c = draw(grid_and_coloring())
    return c, draw(automorphism_for(c)), draw(automorphism_for(c))


def test_grid_requires_n_below_m():
    GridSpec(2, 3)
    with pytest.raises(UnsupportedGrid):
        GridSpec(3, 3)
    with pytest.raises(GridError):
        GridSpec(0, 3)


def test_identity_fixes_every_coloring(rng):
    for _ in range(20):
        rows = [[rng.randrange(3) for _ in range(4)] for _ in range(3)]
        c = Coloring.from_rows(rows)
        assert apply_automorphism(Automorphism.identity(c.grid), c) == c


def test_row_swap_on_two_by_three():
    c = Coloring.from_columns([(1, 1), (1, 2), (2, 2)])
    g = Automorphism((2, 1), (1, 2, 3))
    assert apply_automorphism(g, c).columns() == [(1, 1), (2, 1), (2, 2)]


def test_apply_sends_cell_to_image_position():
    c = Coloring.from_rows([[0, 1, 2, 3], [4, 5, 6, 7]])
    g = Automorphism((2, 1), (2, 3, 4, 1))
    d = apply_automorphism(g, c)
    for i in (1, 2):
        for j in (1, 2, 3, 4):
            assert d(g.sigma[i - 1], g.tau[j - 1]) == c(i, j)


def test_inverse_law_on_seeded_three_by_four(rng):
    grid = GridSpec(3, 4)
    for _ in range(100):
        c = Coloring.from_rows([[rng.randrange(4) for _ in range(4)] for _ in range(3)])
        sigma, tau = list(range(1, 4)), list(range(1, 5))
        rng.shuffle(sigma)
        rng.shuffle(tau)
        g = Automorphism(tuple(sigma), tuple(tau))
        assert apply_automorphism(g, apply_automorphism(g.inverse(), c)) == c
        assert (g @ g.inverse()).is_identity
    assert Automorphism.identity(grid).is_identity


@settings(max_examples=200, deadline=None)
@given(coloring_with_two_automorphisms())
def test_action_is_compatible_with_composition(data):
    c, g, h = data
    assert apply_automorphism(g @ h, c) == apply_automorphism(g, apply_automorphism(h, c))


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_row_permutation_keeps_column_patterns(data):
    c = data.draw(grid_and_coloring())
    sigma = tuple(data.draw(st.permutations(range(1, c.grid.n + 1))))
    d = apply_automorphism(Automorphism(sigma, tuple(range(1, c.grid.m + 1))), c)
    for j in range(1, c.grid.m + 1):
        assert column_pattern(d, j) == column_pattern(c, j)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_column_permutation_moves_column_vectors(data):
    c = data.draw(grid_and_coloring())
    tau = tuple(data.draw(st.permutations(range(1, c.grid.m + 1))))
    d = apply_automorphism(Automorphism(tuple(range(1, c.grid.n + 1)), tau), c)
    tau_inv = Automorphism(tuple(range(1, c.grid.n + 1)), tau).inverse().tau
    for j in range(1, c.grid.m + 1):
        assert column_vector(d, j) == column_vector(c, tau_inv[j - 1])


def test_column_patterns():
    c = Coloring.from_columns([(1, 2, 1), (2, 1, 1), (5, 5, 5), (0, 0, 0)])
    assert column_pattern(c, 1) == ((1, 2), (2, 1))
    assert column_pattern(c, 2) == column_pattern(c, 1)
    assert column_pattern(c, 3) == ((5, 3),)
    with pytest.raises(GridError):
        column_pattern(c, 5)
    with pytest.raises(GridError):
        column_vector(c, 0)


def test_column_vectors():
    c = Coloring.from_columns([(1, 2, 1), (2, 1, 1), (5, 5, 5), (0, 0, 0)])
    assert column_vector(c, 1) == (1, 2, 1)
    assert (1, 2) != (2, 1) and pattern_of((1, 2)) == pattern_of((2, 1))
    distinct = Coloring.from_columns([(1, 1), (1, 2), (2, 2)])
    assert len({column_vector(distinct, j) for j in (1, 2, 3)}) == 3


def test_canonicalize_colors():
    assert canonicalize_colors(Coloring.from_rows([[7, 3]])).cells == ((0, 1),)
    canon = Coloring.from_rows([[0, 1, 0], [2, 1, 0]])
    assert canonicalize_colors(canon) == canon


@settings(max_examples=200, deadline=None)
@given(grid_and_coloring(colors=6))
def test_canonicalize_is_idempotent(c):
    once = canonicalize_colors(c)
    assert canonicalize_colors(once) == once
    assert len(once.colors()) == len(c.colors())


@settings(max_examples=100, deadline=None)
@given(grid_and_coloring(colors=6))
def test_coloring_json_round_trip(c):
    text = json.dumps(c.to_json())
    assert Coloring.from_json(json.loads(text)) == c


def test_list_json_round_trip_and_sorting():
    L = ListAssignment.from_rows([[[2, 1], [3]], ])
    assert L.lists == (((1, 2), (3,)),)
    assert ListAssignment.from_json(json.loads(json.dumps(L.to_json()))) == L
    with pytest.raises(GridError):
        ListAssignment.from_rows([[[1, 1], [2]]])
    with pytest.raises(GridError):
        ListAssignment.from_rows([[[], [2]]])
    with pytest.raises(GridError):
        ListAssignment.from_json({"n": 1, "m": 3, "lists": [[[1], [2]]]})


def test_bad_colorings_rejected():
    with pytest.raises(GridError):
        Coloring.from_rows([[0, -1]])
    with pytest.raises(GridError):
        Coloring.from_json({"n": 2, "m": 3, "cells": [[0, 0, 0]]})
    with pytest.raises(GridError):
        Automorphism((1, 1), (1, 2, 3))


def test_intern_labels_first_occurrence():
    L, labels = intern_labels([[["red", "blue"], ["green"]]])
    assert labels == ["red", "blue", "green"]
    assert L.lists == (((0, 1), (2,)),)


def test_list_assignment_helpers():
    L = ListAssignment.uniform(GridSpec(2, 3), [1, 2])
    assert L.search_size() == 64 and L.min_list_size() == 2
    assert L.admits(Coloring.from_rows([[1, 2, 1], [2, 2, 1]]))
    assert not L.admits(Coloring.from_rows([[1, 2, 3], [2, 2, 1]]))
    wide = ListAssignment.uniform(GridSpec(2, 4), [1, 2])
    assert wide.restrict([1, 3, 4]).grid == GridSpec(2, 3)
    assert L.column(2) == ((1, 2), (1, 2))


def test_row_permutations_identity_first():
    perms = list(row_permutations(3))
    assert perms[0] == (1, 2, 3) and len(perms) == 6 and perms == sorted(perms)
