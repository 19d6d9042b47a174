"""Vertex lattice of K_n x K_m, its colorings, list assignments and symmetries.

Vertex v(i, j) sits in row i and column j of an n x m matrix, v(1, 1) top left.
Rows are the copies of K_m, columns the copies of K_n.  All public indices
(rows, columns, permutation entries) are 1-based; storage is a row-major
tuple of tuples.

For n < m every automorphism of K_n x K_m is a pair (sigma, tau) of a row
permutation and a column permutation, and that product group is what the
rest of the package treats as the symmetry group to break.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import permutations
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .errors import GridError, UnsupportedGrid

ColorVector = tuple[int, ...]
ColorPattern = tuple[tuple[int, int], ...]  # sorted (color, multiplicity) pairs


@dataclass(frozen=True)
class GridSpec:
    n: int
    m: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise GridError("grid dimensions must be integers")
        if self.n < 1:
            raise GridError(f"need n >= 1, got n={self.n}")
        if self.n >= self.m:
            raise UnsupportedGrid(f"need n < m, got n={self.n}, m={self.m}")

    @property
    def size(self) -> int:
        return self.n * self.m

    def positions(self) -> Iterator[tuple[int, int]]:
        """Row-major 1-based positions."""
        for i in range(1, self.n + 1):
            for j in range(1, self.m + 1):
                yield i, j


def _check_rows(rows, n: int, m: int, what: str):
    if len(rows) != n or any(len(r) != m for r in rows):
        raise GridError(f"{what} must be {n} rows of {m} entries")


@dataclass(frozen=True)
class Coloring:
    grid: GridSpec
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        _check_rows(self.cells, self.grid.n, self.grid.m, "coloring")
        for row in self.cells:
            for color in row:
                if not isinstance(color, int) or isinstance(color, bool) or color < 0:
                    raise GridError(f"colors must be non-negative ints, got {color!r}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "Coloring":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if not rows:
            raise GridError("empty coloring")
        return cls(GridSpec(len(rows), len(rows[0])), rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "Coloring":
        return cls.from_rows(list(zip(*columns)))

    def __call__(self, i: int, j: int) -> int:
        return self.cells[i - 1][j - 1]

    def column(self, j: int) -> ColorVector:
        _check_column(self.grid, j)
        return tuple(row[j - 1] for row in self.cells)

    def columns(self) -> list[ColorVector]:
        return list(zip(*self.cells))

    def colors(self) -> set[int]:
        return {x for row in self.cells for x in row}

    def restrict(self, cols: Sequence[int]) -> "Coloring":
        """Sub-coloring on the given columns (in the given order)."""
        rows = tuple(tuple(row[j - 1] for j in cols) for row in self.cells)
        return Coloring(GridSpec(self.grid.n, len(cols)), rows)

    def to_json(self) -> dict:
        return {"n": self.grid.n, "m": self.grid.m, "cells": [list(r) for r in self.cells]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Coloring":
        grid = GridSpec(int(data["n"]), int(data["m"]))
        cells = tuple(tuple(int(x) for x in r) for r in data["cells"])
        return cls(grid, cells)


@dataclass(frozen=True)
class ListAssignment:
    grid: GridSpec
    lists: tuple[tuple[tuple[int, ...], ...], ...]  # lists[i][j]: sorted distinct colors

    def __post_init__(self):
        _check_rows(self.lists, self.grid.n, self.grid.m, "list assignment")
        for row in self.lists:
            for lst in row:
                if not lst:
                    raise GridError("every list must be non-empty")
                if len(set(lst)) != len(lst):
                    raise GridError(f"list {lst} has repeated colors")
                if tuple(sorted(lst)) != tuple(lst):
                    raise GridError("lists must be stored sorted")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Iterable[int]]]) -> "ListAssignment":
        lists = tuple(tuple(tuple(sorted(set(int(x) for x in lst))) for lst in r) for r in rows)
        for r in rows:
            for lst in r:
                if len(set(lst)) != len(list(lst)):
                    raise GridError(f"list {list(lst)} has repeated colors")
        return cls(GridSpec(len(lists), len(lists[0])), lists)

    @classmethod
    def uniform(cls, grid: GridSpec, colors: Iterable[int]) -> "ListAssignment":
        lst = tuple(sorted(set(colors)))
        return cls(grid, tuple(tuple(lst for _ in range(grid.m)) for _ in range(grid.n)))

    def __call__(self, i: int, j: int) -> tuple[int, ...]:
        return self.lists[i - 1][j - 1]

    def column(self, j: int) -> tuple[tuple[int, ...], ...]:
        _check_column(self.grid, j)
        return tuple(row[j - 1] for row in self.lists)

    def search_size(self) -> int:
        size = 1
        for row in self.lists:
            for lst in row:
                size *= len(lst)
        return size

    def min_list_size(self) -> int:
        return min(len(lst) for row in self.lists for lst in row)

    def admits(self, c: Coloring) -> bool:
        if c.grid != self.grid:
            return False
        return all(c.cells[i][j] in self.lists[i][j]
                   for i in range(self.grid.n) for j in range(self.grid.m))

    def restrict(self, cols: Sequence[int]) -> "ListAssignment":
        rows = tuple(tuple(row[j - 1] for j in cols) for row in self.lists)
        return ListAssignment(GridSpec(self.grid.n, len(cols)), rows)

    def to_json(self) -> dict:
        return {"n": self.grid.n, "m": self.grid.m,
                "lists": [[list(lst) for lst in r] for r in self.lists]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ListAssignment":
        grid = GridSpec(int(data["n"]), int(data["m"]))
        la = cls.from_rows(data["lists"])
        if la.grid != grid:
            raise GridError(f"declared {grid.n}x{grid.m} but lists are {la.grid.n}x{la.grid.m}")
        return la


def intern_labels(rows: Sequence[Sequence[Iterable[Hashable]]]) -> tuple[ListAssignment, list]:
    """Map arbitrary hashable list labels to color ids 0, 1, ... in row-major
    first-occurrence order.  Returns the assignment and the id -> label table.
    """
    table: dict = {}
    out = []
    for r in rows:
        out_row = []
        for lst in r:
            ids = []
            for label in lst:
                if label not in table:
                    table[label] = len(table)
                ids.append(table[label])
            out_row.append(ids)
        out.append(out_row)
    return ListAssignment.from_rows(out), list(table)


def _check_column(grid: GridSpec, j: int):
    if not 1 <= j <= grid.m:
        raise GridError(f"column index {j} outside 1..{grid.m}")


def _check_perm(p: Sequence[int], size: int, name: str):
    if sorted(p) != list(range(1, size + 1)):
        raise GridError(f"{name} is not a permutation of 1..{size}: {tuple(p)}")


@dataclass(frozen=True)
class Automorphism:
    """Row permutation sigma and column permutation tau, 1-based one-line form.

    The vertex v(i, j) is sent to v(sigma(i), tau(j)).
    """

    sigma: tuple[int, ...]
    tau: tuple[int, ...]

    def __post_init__(self):
        _check_perm(self.sigma, len(self.sigma), "sigma")
        _check_perm(self.tau, len(self.tau), "tau")

    @classmethod
    def identity(cls, grid: GridSpec) -> "Automorphism":
        return cls(tuple(range(1, grid.n + 1)), tuple(range(1, grid.m + 1)))

    @property
    def is_identity(self) -> bool:
        return (all(s == i for i, s in enumerate(self.sigma, 1))
                and all(t == j for j, t in enumerate(self.tau, 1)))

    def inverse(self) -> "Automorphism":
        return Automorphism(_invert(self.sigma), _invert(self.tau))

    def __matmul__(self, other: "Automorphism") -> "Automorphism":
        """Composition: (self @ other) applies ``other`` first."""
        if len(self.sigma) != len(other.sigma) or len(self.tau) != len(other.tau):
            raise GridError("composing automorphisms of different grids")
        return Automorphism(tuple(self.sigma[s - 1] for s in other.sigma),
                            tuple(self.tau[t - 1] for t in other.tau))

    def to_json(self) -> dict:
        return {"sigma": list(self.sigma), "tau": list(self.tau)}


def _invert(p: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p, 1):
        inv[x - 1] = i
    return tuple(inv)


def apply_automorphism(g: Automorphism, c: Coloring) -> Coloring:
    """Recolor so that result(i, j) = c(sigma^-1(i), tau^-1(j))."""
    if len(g.sigma) != c.grid.n or len(g.tau) != c.grid.m:
        raise GridError(f"automorphism of {len(g.sigma)}x{len(g.tau)} grid "
                        f"applied to {c.grid.n}x{c.grid.m} coloring")
    si, ti = _invert(g.sigma), _invert(g.tau)
    rows = tuple(tuple(c.cells[si[i] - 1][ti[j] - 1] for j in range(c.grid.m))
                 for i in range(c.grid.n))
    return Coloring(c.grid, rows)


def column_pattern(c: Coloring, j: int) -> ColorPattern:
    """Multiset of colors in column j as sorted (color, count) pairs."""
    return pattern_of(c.column(j))


def pattern_of(vector: Iterable[int]) -> ColorPattern:
    return tuple(sorted(Counter(vector).items()))


def column_vector(c: Coloring, j: int) -> ColorVector:
    return c.column(j)


def canonicalize_colors(c: Coloring) -> Coloring:
    """Rename colors to 0, 1, ... in row-major first-occurrence order."""
    table: dict[int, int] = {}
    rows = []
    for row in c.cells:
        rows.append(tuple(table.setdefault(x, len(table)) for x in row))
    return Coloring(c.grid, tuple(rows))


def row_permutations(n: int) -> Iterator[tuple[int, ...]]:
    """All permutations of 1..n in lexicographic order (identity first)."""
    return permutations(range(1, n + 1))


def load_json(path) -> dict:
    with open(path) as fh:
        return json.load(fh)
