from typing import List, Sequence

import numpy as np

from .layer import NodeState
from ..utils.errors import ContractError
from ..utils.numeric import sequential_sum, sorted_sum

JK_POOLS = ("sum", "mean", "concat")


def _layer_matrix(states: Sequence[NodeState], index: int) -> np.ndarray:
    widths = {state.width for state in states}
    if len(widths) > 1:
        raise ContractError(f"layer {index} has mixed state widths {sorted(widths)}")
    return np.stack([state.h for state in states])


def jk_node_vectors(histories: Sequence[Sequence[NodeState]], pool: str = "sum") -> np.ndarray:
    """Per-node jumping-knowledge pooling across layers, shape (n, width)"""
    if pool not in JK_POOLS:
        raise ContractError(f"jk pool must be one of {JK_POOLS}, got {pool!r}")
    if not histories:
        raise ContractError("jk readout needs at least one recorded layer")
    sizes = {len(layer) for layer in histories}
    if len(sizes) != 1:
        raise ContractError(f"layers cover different node counts {sorted(sizes)}")

    layers: List[np.ndarray] = [_layer_matrix(states, i) for i, states in enumerate(histories)]
    if pool == "concat":
        return np.concatenate(layers, axis=1)

    widths = {layer.shape[1] for layer in layers}
    if len(widths) > 1:
        raise ContractError(f"{pool} pooling needs equal layer widths, got {sorted(widths)}")
    pooled = sequential_sum(np.stack(layers), axis=0)
    if pool == "mean":
        pooled = pooled / len(layers)
    return pooled


def jk_readout(histories: Sequence[Sequence[NodeState]], pool: str = "sum") -> np.ndarray:
    """Graph vector: JK-pooled node vectors summed over nodes"""
    nodes = jk_node_vectors(histories, pool)
    return sorted_sum(nodes, axis=0)
