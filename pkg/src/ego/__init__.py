"""
K-hop neighborhoods, ego-networks, edge configurations and distance regularity
"""

from .egonet import (
    EgoNet,
    EdgeConfiguration,
    bfs_distances,
    hop_layers,
    khop_neighbors,
    extract_egonet,
    edge_configuration,
    edge_configurations,
    hop_edge_counts,
)
from .regularity import (
    IntersectionArray,
    all_pairs_distances,
    intersection_array,
    is_distance_regular,
)

__all__ = [
    "EgoNet",
    "EdgeConfiguration",
    "bfs_distances",
    "hop_layers",
    "khop_neighbors",
    "extract_egonet",
    "edge_configuration",
    "edge_configurations",
    "hop_edge_counts",
    "IntersectionArray",
    "all_pairs_distances",
    "intersection_array",
    "is_distance_regular",
]
