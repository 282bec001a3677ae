"""
Lazy random walks and substructure encodings
"""

from .walks import RandomWalk, LandingProbRow, landing_prob_row, self_return_vector
from .features import (
    EncodingSpec,
    SubstructureFeatures,
    SCOPES,
    encode_with,
    encode_node,
    encode_all,
    encode_graph,
    feature_matrix,
)
from .export import feature_columns, features_frame, write_features, sidecar_path, FEATURE_FORMAT_VERSION

__all__ = [
    "RandomWalk",
    "LandingProbRow",
    "landing_prob_row",
    "self_return_vector",
    "EncodingSpec",
    "SubstructureFeatures",
    "SCOPES",
    "encode_with",
    "encode_node",
    "encode_all",
    "encode_graph",
    "feature_matrix",
    "feature_columns",
    "features_frame",
    "write_features",
    "sidecar_path",
    "FEATURE_FORMAT_VERSION",
]
