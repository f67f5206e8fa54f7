"""Matroids behind a rank/independence oracle, with three exact backends.

Elements are 0-based internally and rendered 1-based at the file/CLI surface.
A `Matroid` is immutable after construction and safe to share across
workers; every operation is a pure function of (matroid, arguments, seed).
"""

from __future__ import annotations

import os
import random
from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import CapError, DimensionError

REJECTION_CAP = 10_000_000
SUBSET_CAP_DEFAULT = 16


class Matroid:
    """Ground set [n] plus a rank oracle; uniform, graphic, or vector backed.

    Do not mutate after construction.  Rank queries are memoized, and the
    neighbor lists of bases are cached on first use because the search
    heuristics hammer them.
    """

    def __init__(self, kind, n, rank, data, label=None):
        self.kind = kind
        self.n = n
        self.rank = rank
        self.data = data
        self.label = label or f"{kind}({n})"
        self._rank_cache = {}
        self._adj_cache = {}

    def __repr__(self):
        return f"Matroid({self.label}, n={self.n}, rank={self.rank})"

    def _check_subset(self, subset):
        for i in subset:
            if not 0 <= i < self.n:
                raise DimensionError(f"element {i} out of range for ground set of size {self.n}")

    def rank_of(self, subset) -> int:
        """Rank of a subset of the ground set."""
        key = frozenset(subset)
        cached = self._rank_cache.get(key)
        if cached is not None:
            return cached
        self._check_subset(key)
        if self.kind == "uniform":
            r = min(len(key), self.data)
        elif self.kind == "graphic":
            r = _forest_size(self.data, key)
        else:
            r = _column_rank(self.data, sorted(key))
        self._rank_cache[key] = r
        return r

    def is_independent(self, subset) -> bool:
        subset = tuple(subset)
        return self.rank_of(subset) == len(set(subset)) == len(subset)

    def is_basis(self, subset) -> bool:
        subset = set(subset)
        return len(subset) == self.rank and self.rank_of(subset) == self.rank

    def adjacent_bases(self, basis):
        """All bases reachable by one exchange, sorted; excludes the input."""
        b = tuple(sorted(basis))
        cached = self._adj_cache.get(b)
        if cached is not None:
            return cached
        if not self.is_basis(b):
            raise ValueError(f"{b} is not a basis")
        inside = set(b)
        out = [j for j in range(self.n) if j not in inside]
        neighbors = []
        for i in b:
            rest = inside - {i}
            for j in out:
                cand = rest | {j}
                if self.rank_of(cand) == self.rank:
                    neighbors.append(tuple(sorted(cand)))
        neighbors = tuple(sorted(neighbors))
        self._adj_cache[b] = neighbors
        return neighbors


def uniform_matroid(n: int, r: int) -> Matroid:
    if n < 1:
        raise DimensionError("ground set must have at least one element")
    if not 0 <= r <= n:
        raise DimensionError(f"uniform rank {r} must lie in [0, {n}]")
    return Matroid("uniform", n, r, r, label=f"U({r},{n})")


def graphic_matroid(adjacency) -> Matroid:
    """Graphic matroid of a simple graph given by a 0/1 adjacency matrix.

    Edges are labeled in row-major order of the strict upper triangle.
    Self-loops are rejected; parallel edges cannot be expressed.
    """
    nv = len(adjacency)
    edges = []
    for u in range(nv):
        if len(adjacency[u]) != nv:
            raise DimensionError("adjacency matrix must be square")
        if adjacency[u][u] not in (0, False):
            raise DimensionError("self-loops are not supported")
        for v in range(u + 1, nv):
            if adjacency[u][v] != adjacency[v][u]:
                raise DimensionError("adjacency matrix must be symmetric")
            if adjacency[u][v]:
                edges.append((u, v))
    if not edges:
        raise DimensionError("graph has no edges")
    data = (nv, tuple(edges))
    rank = _forest_size(data, range(len(edges)))
    return Matroid("graphic", len(edges), rank, data, label=f"graph({nv}v,{len(edges)}e)")


def vector_matroid(rows) -> Matroid:
    """Vector matroid of the columns of an m x n matrix of exact rationals."""
    m = len(rows)
    if m == 0 or len(rows[0]) == 0:
        raise DimensionError("vector matroid needs a nonempty matrix")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionError("ragged matrix")
    # Column scaling does not change independence: clear denominators per column.
    cols = []
    for j in range(n):
        col = [Fraction(rows[i][j]) for i in range(m)]
        lcm = 1
        for f in col:
            d = f.denominator
            lcm = lcm * d // gcd(lcm, d)
        cols.append(tuple(int(f * lcm) for f in col))
    data = (m, tuple(cols))
    rank = _column_rank(data, range(n))
    return Matroid("vector", n, rank, data, label=f"vector({m}x{n})")


def _forest_size(data, edge_subset) -> int:
    nv, edges = data
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    size = 0
    for idx in edge_subset:
        u, v = edges[idx]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            size += 1
    return size


def _column_rank(data, col_subset) -> int:
    m, cols = data
    mat = [[cols[j][i] for j in col_subset] for i in range(m)]
    if not mat or not mat[0]:
        return 0
    # Integer Gaussian elimination (rank only, so plain cross-multiplication).
    rank = 0
    row = 0
    ncols = len(mat[0])
    for col in range(ncols):
        piv = next((i for i in range(row, m) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[row], mat[piv] = mat[piv], mat[row]
        for i in range(row + 1, m):
            if mat[i][col] != 0:
                f, g = mat[i][col], mat[row][col]
                mat[i] = [g * a - f * b for a, b in zip(mat[i], mat[row])]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


def incidence_vector(basis, n):
    """0/1 vector with ones on the basis elements."""
    vec = [0] * n
    for i in basis:
        vec[i] = 1
    return tuple(vec)


def greedy_max_basis(M: Matroid, weights):
    """Maximum-weight basis by the greedy algorithm.

    Ties are broken by scanning elements in ascending index order, which
    yields the lexicographically smallest optimal basis.
    """
    if len(weights) != M.n:
        raise DimensionError(f"weight vector length {len(weights)} != {M.n}")
    w = [Fraction(x) for x in weights]
    order = sorted(range(M.n), key=lambda i: (-w[i], i))
    chosen = []
    current = set()
    for i in order:
        if M.rank_of(current | {i}) > len(chosen):
            chosen.append(i)
            current.add(i)
            if len(chosen) == M.rank:
                break
    basis = tuple(sorted(chosen))
    total = sum((w[i] for i in basis), Fraction(0))
    return basis, total


def random_basis(M: Matroid, seed=None, rng=None):
    """Uniform random basis by rejection-sampling rank-sized subsets."""
    if rng is None:
        rng = random.Random(seed)
    for _ in range(REJECTION_CAP):
        cand = rng.sample(range(M.n), M.rank)
        if M.rank_of(cand) == M.rank:
            return tuple(sorted(cand))
    raise CapError(f"no basis found in {REJECTION_CAP} random draws")


class PolytopeConstraints:
    """Facet-style description of the matroid polytope and its dilations.

    Membership in k * P: x >= 0, sum(x) = k * rank, and for every nonempty
    subset A, sum over A <= k * rank(A).
    """

    def __init__(self, M: Matroid, subset_ranks):
        self.matroid = M
        self.subset_ranks = subset_ranks  # dict frozenset -> rank

    def contains(self, x, k=1) -> bool:
        if len(x) != self.matroid.n:
            raise DimensionError("point dimension mismatch")
        xs = [Fraction(v) for v in x]
        if any(v < 0 for v in xs):
            return False
        if sum(xs) != k * self.matroid.rank:
            return False
        for subset, r in self.subset_ranks.items():
            if sum(xs[i] for i in subset) > k * r:
                return False
        return True


def polytope_constraints(M: Matroid, cap=None) -> PolytopeConstraints:
    """All 2^n - 1 subset rank constraints; refuses ground sets above the cap."""
    if cap is None:
        cap = int(os.environ.get("MATROPT_SUBSET_CAP", SUBSET_CAP_DEFAULT))
    if M.n > cap:
        raise CapError(f"ground set size {M.n} exceeds subset-constraint cap {cap}")
    ranks = {}
    for size in range(1, M.n + 1):
        for subset in combinations(range(M.n), size):
            ranks[frozenset(subset)] = M.rank_of(subset)
    return PolytopeConstraints(M, ranks)


def is_connected(M: Matroid, bases=None) -> bool:
    """Connectivity via the polytope dimension: dim P = n - #components."""
    return matroid_components(M, bases) == 1


def matroid_components(M: Matroid, bases=None) -> int:
    """Number of connected components, as n minus the rank of edge directions."""
    from .oracles import enumerate_bases
    from .linalg import rational_rank

    if bases is None:
        bases = enumerate_bases(M)
    base0 = incidence_vector(bases[0], M.n)
    diffs = []
    for b in bases[1:]:
        vec = incidence_vector(b, M.n)
        diffs.append(tuple(a - c for a, c in zip(vec, base0)))
    dim = rational_rank(diffs) if diffs else 0
    return M.n - dim
