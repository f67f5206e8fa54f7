"""Exact-arithmetic toolkit for matroid polytopes.

Matroids behind rank oracles, exact lattice-point counting and Ehrhart
polynomials through rational generating functions, closed forms for uniform
matroids, unimodular-triangulation checks, and seeded multi-criteria search
heuristics over the base-exchange graph, all validated against brute-force
oracles.
"""

from .errors import (
    CapError,
    DimensionError,
    InternalInconsistencyError,
    MatroptError,
    ParseError,
)
from .genfun import (
    GenFunTerm,
    count_lattice_points,
    dilation_polynomial,
    ehrhart_polynomial,
    generic_lambda,
    genfun_of_halfopen,
    matroid_genfun,
    specialize_count,
    term_from_dict,
    term_to_dict,
    todd_eval,
)
from .heuristics import (
    SearchParams,
    SearchReport,
    boundary_pareto_search,
    boundary_start,
    fiber_bfs,
    fiber_bfs_driver,
    local_search,
    pivot_test,
    projected_boundary,
    run_search,
    tabu_search,
)
from .incidence import (
    NOT_A_2FACE,
    SQUARE_2FACE,
    ExchangeGraphs,
    classify_square_2face,
    exchange_graphs,
    is_unimodular_simplex,
    rank_component_relation,
    reduced_determinant,
)
from .io import load_matroid, load_weights, parse_matroid, parse_weights
from .matroid import (
    Matroid,
    graphic_matroid,
    greedy_max_basis,
    incidence_vector,
    is_connected,
    matroid_components,
    polytope_constraints,
    random_basis,
    uniform_matroid,
    vector_matroid,
)
from .multicriteria import (
    BoundingBox,
    Custom,
    Linear,
    MinMax,
    QuarticDistance,
    SquaredDistance,
    WeightMatrix,
    bounding_box,
    minmax_value,
    pareto_filter,
    project,
)
from .oracles import (
    dilation_lattice_count,
    enumerate_bases,
    exact_projected_set,
    interpolate_ehrhart,
    laplacian_tree_count,
    planar_convex_hull,
    polytope_dimension,
    spanning_trees,
)
from .triangulate import (
    Cone,
    HalfOpenSimplicialCone,
    cell_lattice_determinant,
    cone_triangulation,
    half_open_contains,
    half_open_decompose,
    placing_triangulation,
    tangent_cone,
    visible,
)
from .uniform import (
    bounded_composition_counts,
    ehrhart_uniform,
    hstar_from_counts,
    hstar_uniform,
    is_unimodal,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
