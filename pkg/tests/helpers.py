"""Shared randomized builders for the test suite."""

from __future__ import annotations

import random

from treecount import ExactMatrix, Graph


def random_int_matrix(rng: random.Random, order: int, lo: int = -9, hi: int = 9) -> ExactMatrix:
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(order)] for _ in range(order)])


def random_connected_graph(
    rng: random.Random, n_min: int = 3, n_max: int = 8, max_extra: int = 4
) -> Graph:
    """Random spanning tree plus a few extra edges, so connectivity is built in."""
    n = rng.randint(n_min, n_max)
    edges: set[tuple[int, int]] = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u, v = order[rng.randrange(i)], order[i]
        edges.add((u, v) if u < v else (v, u))
    missing = [
        (i, j) for i in range(n) for j in range(i + 1, n) if (i, j) not in edges
    ]
    rng.shuffle(missing)
    for extra in missing[: rng.randint(0, max_extra)]:
        edges.add(extra)
    return Graph(n, edges)
