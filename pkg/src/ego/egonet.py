import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..graph import Graph
from ..utils.errors import DomainError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


def bfs_distances(g: Graph, u: int, max_depth: Optional[int] = None) -> np.ndarray:
    """Shortest-path distance from `u` to every node, -1 where unreachable (or beyond max_depth)"""
    if not 0 <= u < g.n:
        raise IndexError(f"node {u} out of range for n={g.n}")

    dist = np.full(g.n, -1, dtype=np.int64)
    dist[u] = 0
    frontier = np.array([u], dtype=np.int64)
    depth = 0
    while len(frontier) and (max_depth is None or depth < max_depth):
        depth += 1
        reached = np.concatenate([g.neighbors(x) for x in frontier])
        reached = np.unique(reached[dist[reached] < 0])
        dist[reached] = depth
        frontier = reached
    return dist


def hop_layers(dist: np.ndarray, K: int) -> List[np.ndarray]:
    """Nodes at exact distance 1..K, each sorted ascending"""
    return [np.flatnonzero(dist == k) for k in range(1, K + 1)]


def khop_neighbors(g: Graph, u: int, K: int) -> List[np.ndarray]:
    """Element k-1 holds the nodes at shortest-path distance exactly k from u"""
    if K < 1:
        raise DomainError(f"K must be positive, got {K}")
    return hop_layers(bfs_distances(g, u, K), K)


@dataclass(frozen=True)
class EgoNet:
    """Induced K-hop neighborhood of `root`.

    `members` is sorted by (distance, id), so the root is always first and
    `local` (the induced subgraph) numbers members in that order.
    """
    root: int
    K: int
    members: Tuple[Tuple[int, int], ...]
    all_edges: Tuple[Edge, ...]
    internal_edges: Tuple[Edge, ...]
    local: Graph

    @property
    def nodes(self) -> np.ndarray:
        return np.array([node for node, _ in self.members], dtype=np.int64)

    @property
    def distances(self) -> np.ndarray:
        return np.array([d for _, d in self.members], dtype=np.int64)

    def hop(self, k: int) -> List[int]:
        return [node for node, d in self.members if d == k]

    def __len__(self) -> int:
        return len(self.members)


def extract_egonet(g: Graph, u: int, K: int) -> EgoNet:
    if K < 1:
        raise DomainError(f"K must be positive, got {K}")

    dist = bfs_distances(g, u, K)
    nodes = np.flatnonzero(dist >= 0)
    nodes = nodes[np.lexsort((nodes, dist[nodes]))]
    local = g.subgraph(nodes)

    all_edges = sorted(
        (min(int(nodes[a]), int(nodes[b])), max(int(nodes[a]), int(nodes[b])))
        for a, b in local.edges()
    )
    internal = [edge for edge in all_edges if u not in edge]

    return EgoNet(
        root=u,
        K=K,
        members=tuple((int(node), int(dist[node])) for node in nodes),
        all_edges=tuple(all_edges),
        internal_edges=tuple(internal),
        local=local,
    )


@dataclass(frozen=True)
class EdgeConfiguration:
    """counts[i-1] = number of hop-(k+1) nodes with exactly i edges into hop k"""
    k: int
    counts: Tuple[int, ...]

    @property
    def edge_total(self) -> int:
        """Edges between hop k and hop k+1"""
        return sum(i * a for i, a in enumerate(self.counts, start=1))

    @property
    def size(self) -> int:
        return sum(self.counts)


def _configuration_from_dist(g: Graph, dist: np.ndarray, k: int) -> EdgeConfiguration:
    outer = np.flatnonzero(dist == k + 1)
    if not len(outer):
        return EdgeConfiguration(k=k, counts=())
    back_edges = np.array([int(np.sum(dist[g.neighbors(w)] == k)) for w in outer], dtype=np.int64)
    counts = np.bincount(back_edges)[1:]
    nonzero = np.flatnonzero(counts)
    counts = counts[: nonzero[-1] + 1] if len(nonzero) else counts[:0]
    return EdgeConfiguration(k=k, counts=tuple(int(a) for a in counts))


def edge_configuration(g: Graph, u: int, k: int) -> EdgeConfiguration:
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    return _configuration_from_dist(g, bfs_distances(g, u, k + 1), k)


def edge_configurations(g: Graph, u: int, K: int) -> List[EdgeConfiguration]:
    """Configurations for k = 0..K-1 from a single BFS"""
    dist = bfs_distances(g, u, K)
    return [_configuration_from_dist(g, dist, k) for k in range(K)]


def hop_edge_counts(g: Graph, u: int, K: int) -> List[int]:
    return [config.edge_total for config in edge_configurations(g, u, K)]
