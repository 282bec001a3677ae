import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from ..ego import bfs_distances, hop_layers
from ..encoding import SubstructureFeatures
from ..graph import Graph
from ..utils.errors import ContractError, DomainError
from ..utils.numeric import sequential_sum, sorted_sum
from ..utils.seeds import rng_for

logger = logging.getLogger(__name__)

COMBINE_MODES = ("sum", "geometric")
MESSAGE_MODES = ("sum", "mean")


@dataclass(frozen=True)
class NodeState:
    """Hidden states of every node after one layer."""
    h: np.ndarray
    layer: int

    @property
    def width(self) -> int:
        """Number of columns per state."""
        return len(self.h)


@dataclass(frozen=True)
class CombineSpec:
    """How per-hop states are merged: plain sum, or weights θ_k = α(1-α)^k"""
    mode: str = "sum"
    alpha: float = 0.5
    normalize: bool = False

    def __post_init__(self):
        if self.mode not in COMBINE_MODES:
            raise DomainError(f"combine mode must be one of {COMBINE_MODES}, got {self.mode!r}")
        if self.mode == "geometric" and not 0.0 < self.alpha <= 1.0:
            raise DomainError(f"alpha must lie in (0, 1], got {self.alpha}")

    def weights(self, K: int) -> np.ndarray:
        """Hop combination weights theta_1..theta_K."""
        if self.mode == "sum":
            theta = np.ones(K)
        else:
            theta = np.array([self.alpha * (1.0 - self.alpha) ** k for k in range(1, K + 1)])
        if self.normalize:
            total = theta.sum()
            if total > 0:
                theta = theta / total
        return theta


@dataclass(frozen=True)
class SamplerSpec:
    """Cap each hop set at `per_hop_cap` members, drawn uniformly without replacement"""
    per_hop_cap: int
    seed: int = 0

    def __post_init__(self):
        if self.per_hop_cap < 1:
            raise DomainError(f"per_hop_cap must be positive, got {self.per_hop_cap}")

    def sample(self, members: np.ndarray, layer: int, node: int, hop: int) -> np.ndarray:
        """Deterministic subset of a hop ring, seeded by layer, node and hop."""
        if len(members) <= self.per_hop_cap:
            return members
        rng = rng_for(self.seed, layer, node, hop)
        chosen = rng.choice(len(members), size=self.per_hop_cap, replace=False)
        return members[np.sort(chosen)]


@dataclass(frozen=True)
class MessageSpec:
    """sum adds the self term and every hop member; mean divides that by their count"""
    mode: str = "sum"

    def __post_init__(self):
        if self.mode not in MESSAGE_MODES:
            raise DomainError(f"message mode must be one of {MESSAGE_MODES}, got {self.mode!r}")


def encoding_width(feats: Sequence[SubstructureFeatures]) -> int:
    """Width of the combined substructure vectors, which is also the hidden state width"""
    return len(feats[0].combined) if feats else 0


def initial_states(n: int, width: int = 1, value: float = 1.0) -> List[NodeState]:
    """Constant layer-0 states; `width` should match the encodings they are paired with"""
    return [NodeState(h=np.full(width, value, dtype=np.float64), layer=0) for _ in range(n)]


def _stack_inputs(g: Graph, states: Sequence[NodeState], feats: Sequence[SubstructureFeatures]) -> np.ndarray:
    """Per-node layer inputs h_v + f_v, shape (n, width)"""
    if len(states) != g.n or len(feats) != g.n:
        raise ContractError(
            f"expected {g.n} states and features, got {len(states)} states and {len(feats)} features"
        )
    if g.n == 0:
        return np.zeros((0, 0))
    widths = {state.width for state in states}
    if len(widths) != 1:
        raise ContractError(f"hidden states have mixed widths {sorted(widths)}")
    feat_widths = {len(feat.combined) for feat in feats}
    if len(feat_widths) != 1:
        raise ContractError(f"substructure features have mixed widths {sorted(feat_widths)}")
    if widths != feat_widths:
        raise ContractError(
            f"hidden width {widths.pop()} does not match substructure width {feat_widths.pop()}"
        )
    for v, feat in enumerate(feats):
        if feat.node != v:
            raise ContractError(f"feature {v} belongs to node {feat.node}")
    hidden = np.stack([state.h for state in states])
    encoded = np.stack([feat.combined for feat in feats])
    if not np.all(np.isfinite(hidden)):
        raise ContractError("hidden states must be finite")
    return hidden + encoded


def forward_layer(
    g: Graph,
    states: Sequence[NodeState],
    feats: Sequence[SubstructureFeatures],
    K: int,
    combine: CombineSpec = CombineSpec(),
    sampler: Optional[SamplerSpec] = None,
    message: MessageSpec = MessageSpec(),
) -> List[NodeState]:
    """One parameter-free K-hop message passing step.

    Each node enters the layer as h + f, its state with its substructure
    encoding folded in, so the state width stays that of the encodings.

    For each hop k the message is the self input plus the inputs of the
    (possibly sampled) hop-k nodes, summed column by column in sorted order.
    tanh is applied per hop and the hop states are merged by `combine`.
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    inputs = _stack_inputs(g, states, feats)
    layer = (states[0].layer if states else 0) + 1
    theta = combine.weights(K)

    out = []
    for v in range(g.n):
        hops = hop_layers(bfs_distances(g, v, K), K)
        per_hop = []
        for k, members in enumerate(hops, start=1):
            if sampler is not None:
                members = sampler.sample(members, layer, v, k)
            rows = inputs[np.concatenate([[v], members]).astype(np.int64)]
            m = sorted_sum(rows, axis=0)
            if message.mode == "mean":
                m = m / len(rows)
            per_hop.append(theta[k - 1] * np.tanh(m))
        out.append(NodeState(h=sequential_sum(np.stack(per_hop), axis=0), layer=layer))
    return out


def run_layers(
    g: Graph,
    feats: Sequence[SubstructureFeatures],
    L: int,
    K: int,
    combine: CombineSpec = CombineSpec(),
    sampler: Optional[SamplerSpec] = None,
    message: MessageSpec = MessageSpec(),
    initial: Optional[Sequence[NodeState]] = None,
) -> List[List[NodeState]]:
    """States after each of L layers (the initial states are not included)"""
    if L < 1:
        raise DomainError(f"layer count must be >= 1, got {L}")
    states = list(initial) if initial is not None else initial_states(g.n, encoding_width(feats))
    history = []
    for _ in range(L):
        states = forward_layer(g, states, feats, K, combine, sampler, message)
        history.append(states)
    logger.debug(f"Ran {L} layer(s) on {g!r} at width {states[0].width if states else 0}")
    return history
