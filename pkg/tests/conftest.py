"""Shared matroid catalog and independent brute-force helpers.

The helpers here are deliberately naive (full subset sweeps, direct
definitions) so they can serve as oracles for the package's cleverer code.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from matropt import (
    Matroid,
    enumerate_bases,
    graphic_matroid,
    incidence_vector,
    is_connected,
    uniform_matroid,
    vector_matroid,
)

K4_ADJACENCY = [
    [0, 1, 1, 1],
    [1, 0, 1, 1],
    [1, 1, 0, 1],
    [1, 1, 1, 0],
]

# Paper's running example: the 16 spanning trees of the complete graph on
# four nodes, edges labeled row-major over the upper triangle (1-based).
K4_BASES_1BASED = [
    {3, 5, 6}, {3, 4, 6}, {3, 4, 5}, {2, 5, 6}, {2, 4, 6}, {2, 4, 5},
    {2, 3, 5}, {2, 3, 4}, {1, 5, 6}, {1, 4, 6}, {1, 4, 5}, {1, 3, 6},
    {1, 3, 4}, {1, 2, 6}, {1, 2, 5}, {1, 2, 3},
]

# 2 x 5 realization used in the introduction of vector matroids: columns
# 1 and 5 are parallel, so {1, 5} is dependent.
VECTOR_2x5 = [
    [1, 0, 1, -1, 2],
    [1, 1, 0, 1, 2],
]


def k4_matroid():
    return graphic_matroid(K4_ADJACENCY)


def cycle_adjacency(k):
    adj = [[0] * k for _ in range(k)]
    for i in range(k):
        adj[i][(i + 1) % k] = adj[(i + 1) % k][i] = 1
    return adj


def diamond_adjacency():
    # K4 minus one edge: two triangles sharing an edge (5 edges).
    adj = [row[:] for row in K4_ADJACENCY]
    adj[0][3] = adj[3][0] = 0
    return adj


def k23_adjacency():
    adj = [[0] * 5 for _ in range(5)]
    for a in (0, 1):
        for b in (2, 3, 4):
            adj[a][b] = adj[b][a] = 1
    return adj


def wheel4_adjacency():
    # Hub 0 joined to a 4-cycle on 1..4: five vertices, eight edges.
    adj = [[0] * 5 for _ in range(5)]
    cycle = [1, 2, 3, 4]
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % 4]
        adj[u][v] = adj[v][u] = 1
        adj[0][u] = adj[u][0] = 1
    return adj


def square_matroid():
    # Direct sum of two 2-element rank-1 uniform matroids: P is a square.
    return vector_matroid([[1, 1, 0, 0], [0, 0, 1, 1]])


def vector_k4():
    """Oriented vertex-edge incidence of K4, one row dropped: the same
    matroid as the graphic backend, with identical edge labels."""
    return vector_matroid(
        [
            [1, 1, 1, 0, 0, 0],
            [-1, 0, 0, 1, 1, 0],
            [0, -1, 0, -1, 0, 1],
        ]
    )


def catalog_small():
    """Matroids with n <= 7, mixed backends, used all over the suite."""
    items = [
        uniform_matroid(1, 1),
        uniform_matroid(2, 1),
        uniform_matroid(3, 1),
        uniform_matroid(3, 2),
        uniform_matroid(4, 2),
        uniform_matroid(5, 2),
        uniform_matroid(5, 3),
        uniform_matroid(6, 2),
        uniform_matroid(6, 3),
        uniform_matroid(7, 3),
        uniform_matroid(8, 4),
        graphic_matroid(wheel4_adjacency()),
        graphic_matroid(cycle_adjacency(3)),
        graphic_matroid(cycle_adjacency(4)),
        graphic_matroid(cycle_adjacency(5)),
        graphic_matroid(diamond_adjacency()),
        k4_matroid(),
        graphic_matroid(k23_adjacency()),
        vector_matroid(VECTOR_2x5),
        square_matroid(),
    ]
    return items


def catalog_connected(max_n):
    return [M for M in catalog_small() if M.n <= max_n and is_connected(M)]


@pytest.fixture(scope="session")
def k4():
    return k4_matroid()


@pytest.fixture(scope="session")
def u24():
    return uniform_matroid(4, 2)


@pytest.fixture(scope="session")
def catalog():
    return catalog_small()


# Independent oracles -------------------------------------------------------


def brute_rank(M: Matroid, subset) -> int:
    """Largest independent subset by sweeping all subsets (oracle)."""
    subset = tuple(subset)
    best = 0
    for size in range(len(subset), -1, -1):
        for sub in combinations(subset, size):
            if M.rank_of(sub) == len(sub):
                best = max(best, size)
                break
        if best:
            break
    return best


def brute_adjacent(M: Matroid, basis):
    """Single-exchange neighbors straight from the definition (oracle)."""
    basis = set(basis)
    out = set()
    for i in basis:
        for j in range(M.n):
            if j not in basis:
                cand = tuple(sorted((basis - {i}) | {j}))
                if M.is_basis(cand):
                    out.add(cand)
    return out


def brute_max_weight(M: Matroid, weights):
    from fractions import Fraction

    best = None
    for b in enumerate_bases(M):
        val = sum(Fraction(weights[i]) for i in b)
        if best is None or val > best[1] or (val == best[1] and b < best[0]):
            best = (b, val)
    return best


def random_connected_graph(rng: random.Random, max_nodes=9, extra_hi=2):
    """Seeded connected graph: a random tree plus a few extra edges."""
    nodes = rng.randint(5, max_nodes)
    edges = set()
    # Random tree: attach each new node to a random earlier one.
    for v in range(1, nodes):
        u = rng.randrange(v)
        edges.add((u, v))
    extra = rng.randint(1, extra_hi)
    tries = 0
    while extra > 0 and tries < 100:
        tries += 1
        u, v = rng.randrange(nodes), rng.randrange(nodes)
        if u == v:
            continue
        e = (min(u, v), max(u, v))
        if e not in edges:
            edges.add(e)
            extra -= 1
    adj = [[0] * nodes for _ in range(nodes)]
    for u, v in edges:
        adj[u][v] = adj[v][u] = 1
    return adj


def random_weight_matrix(rng: random.Random, d, n, lo=0, hi=20):
    return tuple(tuple(rng.randint(lo, hi) for _ in range(n)) for _ in range(d))


def all_subsets(n):
    for size in range(n + 1):
        yield from combinations(range(n), size)


def incidence_rows(M: Matroid, bases):
    return [incidence_vector(b, M.n) for b in bases]
