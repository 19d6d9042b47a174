"""Seeded random list assignments and colorings."""

from __future__ import annotations

import json
import random
from typing import Iterable, Iterator, Optional

from .errors import GridError
from .grid import Automorphism, Coloring, GridSpec, ListAssignment

STRATA = ("random", "all-uniform", "no-uniform", "mixed")


def _draw_list(rng: random.Random, universe: int, size: int) -> list[int]:
    return sorted(rng.sample(range(universe), size))


def _uniform_column(rng, n, universe, size):
    lst = _draw_list(rng, universe, size)
    return [lst] * n


def _non_uniform_column(rng, n, universe, size):
    col = [_draw_list(rng, universe, size) for _ in range(n)]
    while all(lst == col[0] for lst in col):
        col[rng.randrange(n)] = _draw_list(rng, universe, size)
    return col


def random_list_assignment(rng: random.Random, n: int, m: int, list_size: int,
                           universe_size: int, stratum: str = "random") -> ListAssignment:
    if stratum not in STRATA:
        raise GridError(f"unknown stratum {stratum!r}; expected one of {STRATA}")
    if list_size > universe_size:
        raise GridError(f"list size {list_size} exceeds universe {universe_size}")
    non_uniform_possible = n >= 2 and list_size < universe_size
    if stratum in ("no-uniform", "mixed") and not non_uniform_possible:
        raise GridError(f"stratum {stratum} needs n >= 2 and list_size < universe_size")
    if stratum == "mixed" and m < 2:
        raise GridError("stratum mixed needs m >= 2")

    if stratum == "random":
        cols = [[_draw_list(rng, universe_size, list_size) for _ in range(n)] for _ in range(m)]
    elif stratum == "all-uniform":
        cols = [_uniform_column(rng, n, universe_size, list_size) for _ in range(m)]
    elif stratum == "no-uniform":
        cols = [_non_uniform_column(rng, n, universe_size, list_size) for _ in range(m)]
    else:
        kinds = [rng.random() < 0.5 for _ in range(m)]
        u, v = rng.sample(range(m), 2)
        kinds[u], kinds[v] = True, False
        cols = [(_uniform_column if k else _non_uniform_column)(rng, n, universe_size, list_size)
                for k in kinds]
    rows = [[cols[j][i] for j in range(m)] for i in range(n)]
    return ListAssignment.from_rows(rows)


def generate_corpus(n: int, m: int, list_size: int, universe_size: int, count: int,
                    seed: int, stratum: str = "random") -> list[ListAssignment]:
    """``count`` list assignments drawn from one seeded stream."""
    if min(n, m, list_size, universe_size) < 1 or count < 0:
        raise GridError("corpus parameters must be positive")
    GridSpec(n, m)
    rng = random.Random(seed)
    return [random_list_assignment(rng, n, m, list_size, universe_size, stratum)
            for _ in range(count)]


def dumps_corpus(instances: Iterable[ListAssignment]) -> str:
    return "".join(json.dumps(L.to_json(), separators=(",", ":")) + "\n" for L in instances)


def write_corpus(instances: Iterable[ListAssignment], path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps_corpus(instances))


def read_corpus(path) -> Iterator[ListAssignment]:
    with open(path) as fh:
        for line in fh:
            if line.strip():
                yield ListAssignment.from_json(json.loads(line))


def random_coloring(rng: random.Random, grid: GridSpec, colors: int) -> Coloring:
    rows = [[rng.randrange(colors) for _ in range(grid.m)] for _ in range(grid.n)]
    return Coloring.from_rows(rows)


def random_automorphism(rng: random.Random, grid: GridSpec) -> Automorphism:
    sigma = list(range(1, grid.n + 1))
    tau = list(range(1, grid.m + 1))
    rng.shuffle(sigma)
    rng.shuffle(tau)
    return Automorphism(tuple(sigma), tuple(tau))


def symmetric_coloring(rng: random.Random, grid: GridSpec, colors: int,
                       g: Optional[Automorphism] = None) -> Coloring:
    """Random coloring fixed by ``g`` (random if omitted): each cell orbit of
    g gets one color."""
    g = g or random_automorphism(rng, grid)
    cells: list[list[Optional[int]]] = [[None] * grid.m for _ in range(grid.n)]
    for i in range(grid.n):
        for j in range(grid.m):
            if cells[i][j] is not None:
                continue
            color = rng.randrange(colors)
            a, b = i, j
            while cells[a][b] is None:
                cells[a][b] = color
                a, b = g.sigma[a] - 1, g.tau[b] - 1
    return Coloring.from_rows(cells)
