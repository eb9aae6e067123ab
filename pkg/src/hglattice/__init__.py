"""Concept lattices of hypergraph incidence matrices, with s-path analytics."""

from .core import (
    BitVec,
    DimensionError,
    EdgeSet,
    Hypergraph,
    IncidenceMatrix,
    IngestionError,
    SizeLimitError,
    VertexSet,
    closure,
    dedup_edges,
    extent_prime,
    from_edge_list,
    intent_prime,
    is_bottomed,
    is_topped,
    overlap_size,
)
from .lattice import (
    Concept,
    ConceptLattice,
    GaloisLabel,
    build_lattice_naive,
    build_lattice_vectorized,
    edge_anchor,
    enumerate_concepts_oracle,
    galois_labels,
    verify_isomorphism,
)
from .analytics import (
    DepthHistograms,
    DepthStatistics,
    NoSPathError,
    PrunedLatticeView,
    SPathResult,
    depth_histograms,
    depth_statistics,
    prune,
    s_connected_components,
    shortest_s_path,
)
from .oracle import (
    SLineGraph,
    intersection_complex_bruteforce,
    oracle_components,
    oracle_shortest_s_path,
    s_line_graph,
)
from .formats import (
    ParseError,
    format_edge_list,
    lattice_to_dot,
    parse_edge_list,
    parse_incidence_csv,
    parse_lattice_document,
    serialize_lattice,
)
from .generate import chung_lu_hypergraph, uniform_hypergraph

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "Concept",
    "ConceptLattice",
    "DepthHistograms",
    "DepthStatistics",
    "DimensionError",
    "EdgeSet",
    "GaloisLabel",
    "Hypergraph",
    "IncidenceMatrix",
    "IngestionError",
    "NoSPathError",
    "ParseError",
    "PrunedLatticeView",
    "SLineGraph",
    "SPathResult",
    "SizeLimitError",
    "VertexSet",
    "build_lattice_naive",
    "build_lattice_vectorized",
    "chung_lu_hypergraph",
    "closure",
    "dedup_edges",
    "depth_histograms",
    "depth_statistics",
    "edge_anchor",
    "enumerate_concepts_oracle",
    "extent_prime",
    "format_edge_list",
    "from_edge_list",
    "galois_labels",
    "intent_prime",
    "intersection_complex_bruteforce",
    "is_bottomed",
    "is_topped",
    "lattice_to_dot",
    "oracle_components",
    "oracle_shortest_s_path",
    "overlap_size",
    "parse_edge_list",
    "parse_incidence_csv",
    "parse_lattice_document",
    "prune",
    "s_connected_components",
    "s_line_graph",
    "serialize_lattice",
    "shortest_s_path",
    "uniform_hypergraph",
    "verify_isomorphism",
]
