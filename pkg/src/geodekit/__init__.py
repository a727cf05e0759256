"""Exact strong geodetic numbers, strong geodetic cores and related bounds."""

from .bounds import (
    BoundsReport,
    check_bounds,
    counterexample_closed_forms,
    counterexample_gap,
    eq1_holds,
    hat_lower,
    product_upper_corollary,
    product_upper_old,
    product_upper_sgc,
    sgc_bounds,
)
from .certificates import CertificateError, CoreCertificate, SgCertificate, verify
from .codecs import ParseError, read_edge_list, read_graph, read_graph6, write_dot, write_edge_list, write_graph6
from .distance import DistanceOracle, count_geodesics, enumerate_geodesics, interval, is_convex
from .familyspec import parse_spec
from .graph import DisconnectedGraphError, Graph, GraphError, build_graph, simplicial_vertices
from .limits import DEFAULT_LIMITS, INCONCLUSIVE, PROVED, Outcome, SearchLimits
from .solvers import (
    enumerate_min_sg_sets,
    geodetic_number,
    has_convex_2_partition,
    is_generalized_geodetic,
    is_geodetic_graph,
    is_geodetic_set,
    is_strong_geodetic_set,
    sgc_of_set,
    strong_geodetic_core_number,
    strong_geodetic_number,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "check_bounds",
    "counterexample_closed_forms",
    "counterexample_gap",
    "eq1_holds",
    "hat_lower",
    "product_upper_corollary",
    "product_upper_old",
    "product_upper_sgc",
    "sgc_bounds",
    "CertificateError",
    "CoreCertificate",
    "SgCertificate",
    "verify",
    "ParseError",
    "read_edge_list",
    "read_graph",
    "read_graph6",
    "write_dot",
    "write_edge_list",
    "write_graph6",
    "DistanceOracle",
    "count_geodesics",
    "enumerate_geodesics",
    "interval",
    "is_convex",
    "parse_spec",
    "DisconnectedGraphError",
    "Graph",
    "GraphError",
    "build_graph",
    "simplicial_vertices",
    "DEFAULT_LIMITS",
    "INCONCLUSIVE",
    "PROVED",
    "Outcome",
    "SearchLimits",
    "enumerate_min_sg_sets",
    "geodetic_number",
    "has_convex_2_partition",
    "is_generalized_geodetic",
    "is_geodetic_graph",
    "is_geodetic_set",
    "is_strong_geodetic_set",
    "sgc_of_set",
    "strong_geodetic_core_number",
    "strong_geodetic_number",
]
