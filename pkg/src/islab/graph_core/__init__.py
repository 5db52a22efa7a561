"""Labelled graphs, neighbourhood calculus, structure recognition and I/O."""

from .completion import Piece, complete_to_cycle, union_graph
from .graph import LabeledGraph, bits, common_neighborhood, complement, mask_of, pair_index
from .io import (
    emit_graph6,
    enumerate_graphs,
    parse_graph,
    parse_graph6,
    parse_sparse6,
    random_graph,
)
from .search import find_induced_of_type, has_induced_cycle
from .structure import (
    CLIQUE,
    OTHER,
    SINGLE,
    STAR,
    SUN,
    TRIANGLE,
    ComponentKind,
    LinearForestInfo,
    classify_components,
    edges_from_kind,
    is_disjoint_union_of_ksuns,
    linear_forest_info,
    path_order,
)

__all__ = [
    "CLIQUE", "OTHER", "SINGLE", "STAR", "SUN", "TRIANGLE",
    "ComponentKind", "LabeledGraph", "LinearForestInfo", "Piece",
    "bits", "classify_components", "common_neighborhood", "complement",
    "complete_to_cycle", "edges_from_kind", "emit_graph6", "enumerate_graphs",
    "find_induced_of_type", "has_induced_cycle", "is_disjoint_union_of_ksuns",
    "linear_forest_info", "mask_of", "pair_index", "parse_graph", "parse_graph6",
    "parse_sparse6", "path_order", "random_graph", "union_graph",
]
