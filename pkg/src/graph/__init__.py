"""
Graph representation, file formats and generators
"""

from .graph import Graph, GraphId, EdgeCleanup, canonical_pairs
from .formats import (
    parse_edge_list,
    from_edge_list,
    to_edge_list,
    from_graph6,
    to_graph6,
    load_graphs,
    load_graph,
    save_graph,
    dump_graph,
    infer_format,
)
from .generators import (
    generate,
    generate_with_id,
    parse_generator_spec,
    cycle,
    path,
    complete,
    star,
    rook4x4,
    shrikhande,
    disjoint_union,
    random_regular,
    erdos_renyi,
    SPEC_GRAMMAR,
)

__all__ = [
    "Graph",
    "GraphId",
    "EdgeCleanup",
    "canonical_pairs",
    "parse_edge_list",
    "from_edge_list",
    "to_edge_list",
    "from_graph6",
    "to_graph6",
    "load_graphs",
    "load_graph",
    "save_graph",
    "dump_graph",
    "infer_format",
    "generate",
    "generate_with_id",
    "parse_generator_spec",
    "cycle",
    "path",
    "complete",
    "star",
    "rook4x4",
    "shrikhande",
    "disjoint_union",
    "random_regular",
    "erdos_renyi",
    "SPEC_GRAMMAR",
]
