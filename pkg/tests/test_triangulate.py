"""Visibility LP, placing triangulations, cone triangulations, half-open cells."""

import random
from fractions import Fraction

import pytest

from conftest import catalog_connected
from matropt import (
    Cone,
    DimensionError,
    cell_lattice_determinant,
    cone_triangulation,
    enumerate_bases,
    half_open_contains,
    half_open_decompose,
    hstar_from_counts,
    dilation_lattice_count,
    incidence_vector,
    placing_triangulation,
    polytope_dimension,
    tangent_cone,
    uniform_matroid,
    visible,
)
from matropt.linalg import bareiss_det, lattice_span_basis, solve_in_row_space
from matropt.triangulate import facet_normals, join_to_apex


class TestVisible:
    SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]

    def test_point_below_bottom_edge(self):
        assert visible([(0, 0), (1, 0)], self.SQUARE, (Fraction(1, 2), -1))

    def test_point_above_bottom_edge(self):
        assert not visible([(0, 0), (1, 0)], self.SQUARE, (Fraction(1, 2), 2))

    def test_pentagon_two_facets(self):
        # Regular-ish pentagon, integer coordinates; v sits beyond two edges.
        penta = [(0, 0), (4, 0), (5, 3), (2, 5), (-1, 3)]
        edges = [(penta[i], penta[(i + 1) % 5]) for i in range(5)]
        v = (7, 2)

        def sign_test(edge):
            # Independent oracle: v is beyond the edge iff it is strictly on
            # the non-polygon side of the edge's supporting line.
            (x1, y1), (x2, y2) = edge
            def orient(px, py):
                return (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
            inner = [orient(*p) for p in penta if orient(*p) != 0]
            return all(s > 0 for s in inner) and orient(*v) < 0 or \
                   all(s < 0 for s in inner) and orient(*v) > 0

        for edge in edges:
            assert visible(list(edge), penta, v) == sign_test(edge)
        assert sum(visible(list(e), penta, v) for e in edges) == 2

    def test_degenerate_facet_raises(self):
        with pytest.raises(DimensionError):
            visible([(0, 0), (1, 1), (2, 2)], self.SQUARE + [(2, 2)], (5, 0))


class TestPlacingTriangulation:
    def test_affinely_independent_single_cell(self):
        cells, order = placing_triangulation([(0, 0), (1, 0), (0, 1)])
        assert cells == [(0, 1, 2)]
        assert order == (0, 1, 2)

    def test_unit_square_two_triangles(self):
        cells, _ = placing_triangulation([(0, 0), (1, 0), (0, 1), (1, 1)])
        assert len(cells) == 2
        assert all(len(c) == 3 for c in cells)
        covered = set()
        for c in cells:
            covered |= set(c)
        assert covered == {0, 1, 2, 3}

    def test_order_is_recorded_and_respected(self):
        pts = [(0, 0), (2, 0), (0, 2), (1, 1)]
        _, order = placing_triangulation(pts, order=(3, 0, 1, 2))
        assert order == (3, 0, 1, 2)

    def test_interior_points_left_unused(self):
        # A point inside the current hull sees no facet, so it joins no cell;
        # configurations may legitimately triangulate on a subset.
        cells, _ = placing_triangulation([(0, 0), (2, 0), (1, 0), (0, 1)])
        assert cells == [(0, 1, 3)]

    def test_duplicates_ignored(self):
        cells, _ = placing_triangulation([(0, 0), (1, 0), (0, 0), (0, 1)])
        assert all(2 not in c for c in cells)

    def test_volume_coverage_on_polytopes(self):
        # Sum of simplex volumes (in lattice coordinates of the affine hull)
        # equals the normalized volume from an independent count route.
        for M in catalog_connected(6):
            bases = enumerate_bases(M)
            pts = [incidence_vector(b, M.n) for b in bases]
            cells, _ = placing_triangulation(pts)
            dim = polytope_dimension(M, bases)
            base_pt = pts[0]
            span = lattice_span_basis(
                [tuple(a - b for a, b in zip(p, base_pt)) for p in pts[1:]]
            )
            total = 0
            for cell in cells:
                assert len(cell) == dim + 1
                first = pts[cell[0]]
                rows = []
                for idx in cell[1:]:
                    diff = tuple(a - b for a, b in zip(pts[idx], first))
                    coords = solve_in_row_space(span, diff)
                    rows.append([int(x) for x in coords])
                total += abs(bareiss_det(rows))
            counts = [dilation_lattice_count(M, k) for k in range(dim + 1)]
            assert total == sum(hstar_from_counts(counts, dim))

    def test_cells_inside_polytope_sampled(self, u24):
        from matropt import polytope_constraints

        bases = enumerate_bases(u24)
        pts = [incidence_vector(b, u24.n) for b in bases]
        cells, _ = placing_triangulation(pts)
        pc = polytope_constraints(u24)
        rng = random.Random(3)
        for cell in cells:
            for _ in range(5):
                weights = [Fraction(rng.randint(0, 5)) for _ in cell]
                if sum(weights) == 0:
                    continue
                s = sum(weights)
                point = [
                    sum(w * pts[idx][i] for w, idx in zip(weights, cell)) / s
                    for i in range(u24.n)
                ]
                assert pc.contains(point)


class TestTangentCone:
    def test_k4_has_six_generators(self, k4):
        cone = tangent_cone(k4, (0, 1, 2))
        assert len(cone.generators) == 6
        diffs = {
            tuple(a - b for a, b in zip(incidence_vector(nb, 6), cone.apex))
            for nb in k4.adjacent_bases((0, 1, 2))
        }
        assert set(cone.generators) == diffs

    def test_segment_single_generator(self):
        M = uniform_matroid(2, 1)
        cone = tangent_cone(M, (0,))
        assert cone.generators == ((-1, 1),)

    def test_generators_sum_to_zero_total(self, catalog):
        for M in catalog:
            if M.n > 6:
                continue
            for b in enumerate_bases(M):
                for g in tangent_cone(M, b).generators:
                    assert sum(g) == 0

    def test_generator_count_bound(self, catalog):
        # Elementary-set bound: at most n|A| + n + |A| rays at a vertex e_A.
        for M in catalog:
            if M.n > 6:
                continue
            for b in enumerate_bases(M):
                cone = tangent_cone(M, b)
                assert len(cone.generators) <= M.n * len(b) + M.n + len(b)


class TestConeTriangulation:
    def test_simplicial_cone_is_itself(self):
        cone = Cone(apex=(0, 0, 0), generators=((1, 0, 0), (0, 1, 0)))
        cells = cone_triangulation(cone)
        assert cells == [((1, 0, 0), (0, 1, 0))] or set(cells[0]) == {(1, 0, 0), (0, 1, 0)}

    def test_u24_vertex_cone_two_cells(self, u24):
        cells = cone_triangulation(tangent_cone(u24, (0, 1)))
        assert len(cells) == 2
        assert all(len(c) == 3 for c in cells)
        assert all(cell_lattice_determinant(c) == 1 for c in cells)

    def test_k4_vertex_cone_unimodular(self, k4):
        cells = cone_triangulation(tangent_cone(k4, (0, 1, 2)))
        assert all(cell_lattice_determinant(c) == 1 for c in cells)
        assert all(len(c) == 5 for c in cells)

    def test_all_catalog_cells_unimodular(self, catalog):
        for M in catalog:
            if M.n > 7:
                continue
            for b in enumerate_bases(M):
                for cell in cone_triangulation(tangent_cone(M, b)):
                    if cell:
                        assert cell_lattice_determinant(cell) == 1

    def test_cell_count_bound(self, catalog):
        # Polynomial bound from the volume argument: 2^r * n!/(n-r)! cells.
        from math import perm

        for M in catalog:
            if M.n > 6:
                continue
            for b in enumerate_bases(M):
                cells = cone_triangulation(tangent_cone(M, b))
                assert len(cells) <= 2 ** M.rank * perm(M.n, M.rank)


class TestHalfOpen:
    def test_single_cell_stays_closed(self):
        cells = [((1, 0), (0, 1))]
        halves = half_open_decompose((0, 0), cells)
        assert halves[0].strict_indices == frozenset()

    def test_shared_facet_open_on_one_side(self):
        # Two cells of a half-plane cone share the ray through (1, 1).
        cells = [((1, 0), (1, 1)), ((1, 1), (0, 1))]
        halves = half_open_decompose((0, 0), cells)
        for point in [(2, 2), (1, 1), (3, 3)]:
            assert sum(half_open_contains(h, point) for h in halves) == 1
        for point in [(1, 0), (0, 1), (2, 1), (1, 2)]:
            assert sum(half_open_contains(h, point) for h in halves) == 1

    def test_not_generic_y_raises(self):
        cells = [((1, 0), (1, 1)), ((1, 1), (0, 1))]
        with pytest.raises(DimensionError):
            half_open_decompose((0, 0), cells, y=(1, 1))  # on the shared wall

    def test_exterior_y_rejected(self):
        cells = [((1, 0), (1, 1)), ((1, 1), (0, 1))]
        with pytest.raises(DimensionError):
            half_open_decompose((0, 0), cells, y=(-3, -1))  # outside the cone

    def test_explicit_interior_y_accepted(self):
        cells = [((1, 0), (1, 1)), ((1, 1), (0, 1))]
        halves = half_open_decompose((0, 0), cells, y=(3, 1))
        assert sum(1 for h in halves if not h.strict_indices) == 1
        for point in [(2, 2), (1, 0), (0, 1), (5, 2)]:
            assert sum(half_open_contains(h, point) for h in halves) == 1

    def test_partition_k4_vertex_cone(self, k4):
        cone = tangent_cone(k4, (0, 1, 2))
        cells = cone_triangulation(cone)
        halves = half_open_decompose(cone.apex, cells)
        rng = random.Random(0)
        for _ in range(1000):
            point = list(cone.apex)
            for g in cone.generators:
                c = rng.randint(0, 3)
                for i in range(len(point)):
                    point[i] += c * g[i]
            assert sum(half_open_contains(h, point) for h in halves) == 1

    def test_partition_catalog_cones(self, catalog):
        rng = random.Random(1)
        for M in catalog:
            if M.n > 6:
                continue
            for b in enumerate_bases(M)[:3]:
                cone = tangent_cone(M, b)
                if not cone.generators:
                    continue
                cells = cone_triangulation(cone)
                halves = half_open_decompose(cone.apex, cells)
                for _ in range(60):
                    point = list(cone.apex)
                    for g in cone.generators:
                        c = rng.randint(0, 2)
                        for i in range(len(point)):
                            point[i] += c * g[i]
                    assert sum(half_open_contains(h, point) for h in halves) == 1


class TestFacetNormals:
    def test_orthogonality_and_sign(self):
        gens = ((1, 0, -1), (0, 1, -1))
        normals, coords = facet_normals(gens)
        for j, nrm in enumerate(normals):
            for i, g in enumerate(gens):
                dot = sum(Fraction(a) * b for a, b in zip(nrm, g))
                if i == j:
                    assert dot < 0
                else:
                    assert dot == 0

    def test_join_to_apex_keeps_boundary_only(self):
        cells = [(0, 1, 2), (0, 2, 3)]
        joined = join_to_apex(cells, 0)
        assert sorted(joined) == [(0, 1, 2), (0, 2, 3)]
