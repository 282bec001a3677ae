"""
Parameter-free SEK message passing and jumping-knowledge readout
"""

from .layer import (
    NodeState,
    CombineSpec,
    SamplerSpec,
    MessageSpec,
    COMBINE_MODES,
    MESSAGE_MODES,
    encoding_width,
    initial_states,
    forward_layer,
    run_layers,
)
from .readout import jk_node_vectors, jk_readout, JK_POOLS

__all__ = [
    "NodeState",
    "CombineSpec",
    "SamplerSpec",
    "MessageSpec",
    "COMBINE_MODES",
    "MESSAGE_MODES",
    "encoding_width",
    "initial_states",
    "forward_layer",
    "run_layers",
    "jk_node_vectors",
    "jk_readout",
    "JK_POOLS",
]
