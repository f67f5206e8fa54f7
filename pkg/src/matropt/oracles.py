"""Independent brute-force ground truth used to validate everything else.

These routines favor obviousness over speed: complete subset sweeps,
contraction/deletion tree enumeration, direct lattice scans.  They are the
reference side of every dual-route check in the test suite, so nothing here
may ever call into the pipeline it validates.
"""

from __future__ import annotations

import os
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import CapError, DimensionError, InternalInconsistencyError
from .linalg import bareiss_det
from .matroid import Matroid, matroid_components
from .multicriteria import WeightMatrix, project

BASES_CAP_DEFAULT = 10_000_000


def enumerate_bases(M: Matroid, cap=None):
    """Every basis of M, as sorted tuples, in lexicographic order."""
    if cap is None:
        cap = int(os.environ.get("MATROPT_BASES_CAP", BASES_CAP_DEFAULT))
    if comb(M.n, M.rank) > cap:
        raise CapError(f"C({M.n},{M.rank}) exceeds enumeration cap {cap}")
    return [b for b in combinations(range(M.n), M.rank) if M.is_basis(b)]


def spanning_trees(n_vertices: int, edges):
    """Stream every spanning tree of a connected multigraph, once each.

    Contraction/deletion: trees through the pivot edge come from the
    contracted graph, the rest from the deleted graph (pruned when deletion
    disconnects).  Output-sensitive and duplicate-free by construction.
    """
    edges = [tuple(e) for e in edges]
    if not _connected(n_vertices, edges):
        raise DimensionError("spanning-tree enumeration requires a connected graph")

    def rec(nv, elist, chosen):
        if nv == 1:
            yield frozenset(chosen)
            return
        u, v, label = elist[0]
        if u == v:  # contraction can create loops; they join no tree
            yield from rec(nv, elist[1:], chosen)
            return
        # Contract (u, v): fold the higher endpoint onto the lower one and
        # shift every label above it down.
        lo, hi = (u, v) if u < v else (v, u)
        contracted = []
        for a, b, lab in elist[1:]:
            a2 = lo if a == hi else (a - 1 if a > hi else a)
            b2 = lo if b == hi else (b - 1 if b > hi else b)
            contracted.append((a2, b2, lab))
        yield from rec(nv - 1, contracted, chosen + [label])
        rest = elist[1:]
        if _connected(nv, [(a, b) for a, b, _ in rest]):
            yield from rec(nv, rest, chosen)

    labeled = [(u, v, i) for i, (u, v) in enumerate(edges)]
    yield from rec(n_vertices, labeled, [])


def _connected(nv, edges) -> bool:
    parent = list(range(nv))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = nv
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def laplacian_tree_count(n_vertices: int, edges) -> int:
    """Matrix-tree count: determinant of any cofactor of the Laplacian."""
    lap = [[0] * n_vertices for _ in range(n_vertices)]
    for u, v in edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    minor = [row[1:] for row in lap[1:]]
    return bareiss_det(minor)


def exact_projected_set(M: Matroid, W: WeightMatrix, bases=None):
    """Map projected point -> fiber size, by full basis enumeration."""
    if W.n != M.n:
        raise DimensionError(f"weight matrix has {W.n} columns, matroid has {M.n}")
    if bases is None:
        bases = enumerate_bases(M)
    fibers = {}
    for b in bases:
        p = project(W, b)
        fibers[p] = fibers.get(p, 0) + 1
    return fibers


def planar_convex_hull(points):
    """Counter-clockwise hull vertices of integer points in the plane.

    Monotone chain with exact cross products; collinear non-extreme points
    are dropped.  Degenerate inputs give the natural degenerate hull.
    """
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) < 2:  # all points collinear: keep the two endpoints
        return [pts[0], pts[-1]]
    return hull


def flats(M: Matroid):
    """All closed sets, from the full subset rank table (n <= 16)."""
    if M.n > 16:
        raise CapError("flat enumeration is capped at 16 elements")
    out = []
    for size in range(0, M.n + 1):
        for subset in combinations(range(M.n), size):
            r = M.rank_of(subset)
            inside = set(subset)
            if all(M.rank_of(inside | {j}) > r for j in range(M.n) if j not in inside):
                out.append((subset, r))
    return out


def dilation_lattice_count(M: Matroid, k: int) -> int:
    """#(k P_M intersect Z^n) by direct sweep of the facet description.

    Points satisfy x >= 0, sum = k*rank, and sum over F <= k*rank(F) for
    every flat F (constraints for non-closed sets follow from their
    closures).  Uniform matroids keep only the box constraints, so their
    count is read off a bounded-composition table instead of a point sweep.
    """
    if k < 0:
        raise DimensionError("dilation factor must be >= 0")
    if k == 0:
        return 1
    if M.n > 16:
        raise CapError("lattice sweep is capped at 16 elements")
    r = M.rank
    if M.kind == "uniform":
        # Constraints collapse to 0 <= x_i <= k with total k*r.
        from .uniform import bounded_composition_counts

        table = bounded_composition_counts(M.n, k + 1)
        total = k * r
        return table[total] if total < len(table) else 0
    constraint_list = [
        (subset, cap) for subset, cap in flats(M) if 0 < len(subset) < M.n
    ]
    caps = [M.rank_of([i]) * k for i in range(M.n)]
    count = 0
    x = [0] * M.n

    def sweep(i, remaining):
        nonlocal count
        if i == M.n:
            if remaining == 0:
                count += 1
            return
        tail_cap = sum(caps[i + 1 :])
        lo = max(0, remaining - tail_cap)
        hi = min(caps[i], remaining)
        for v in range(lo, hi + 1):
            x[i] = v
            if all(
                sum(x[j] for j in subset if j <= i) <= cap * k
                for subset, cap in constraint_list
            ):
                sweep(i + 1, remaining - v)
        x[i] = 0

    sweep(0, k * r)
    return count


def dilation_count_table(M: Matroid, kmax: int):
    """Counts for k = 0..kmax as a list."""
    return [dilation_lattice_count(M, k) for k in range(kmax + 1)]


def interpolate_ehrhart(counts, dim: int):
    """Unique degree-dim polynomial through counts at k = 0, 1, 2, ...

    Over-determined tables must agree with the fit; disagreement signals an
    upstream bug and raises.
    Returns ascending coefficients as exact Fractions.
    """
    if len(counts) < dim + 1:
        raise DimensionError(f"need at least {dim + 1} counts for degree {dim}")
    xs = list(range(dim + 1))
    ys = [Fraction(c) for c in counts[: dim + 1]]
    # Newton divided differences, then expand to monomial coefficients.
    table = list(ys)
    for level in range(1, dim + 1):
        for i in range(dim, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * (dim + 1)
    basis = [Fraction(1)]  # expanding product (k - x_0)...(k - x_{i-1})
    for i in range(dim + 1):
        for j, b in enumerate(basis):
            coeffs[j] += table[i] * b
        new = [Fraction(0)] * (len(basis) + 1)
        for j, b in enumerate(basis):
            new[j] -= b * xs[i]
            new[j + 1] += b
        basis = new
    for k in range(dim + 1, len(counts)):
        if evaluate_polynomial(coeffs, k) != counts[k]:
            raise InternalInconsistencyError(
                f"count at k={k} disagrees with the degree-{dim} interpolant"
            )
    return tuple(coeffs)


def evaluate_polynomial(coeffs, k):
    """Horner evaluation with exact arithmetic."""
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * k + c
    return acc


def polytope_dimension(M: Matroid, bases=None) -> int:
    """dim P_M = n - number of connected components of the matroid."""
    return M.n - matroid_components(M, bases)
