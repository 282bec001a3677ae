import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

import numpy as np

from .walks import RandomWalk
from ..ego import bfs_distances, extract_egonet
from ..graph import Graph
from ..utils.errors import DomainError
from ..utils.numeric import AGGREGATIONS, aggregate
from ..utils.pool import WorkerPool, pool_or_serial

logger = logging.getLogger(__name__)

SCOPES = ("graph", "egonet")


@dataclass(frozen=True)
class EncodingSpec:
    """Parameters of the substructure encoding f.

    scope="graph" walks over the whole graph; scope="egonet" walks over the
    induced K-hop ego-network of each node, so the encoding only sees that
    node's own neighborhood.
    """
    K: int = 2
    l: int = 6
    agg: str = "mean"
    scope: str = "graph"

    def __post_init__(self):
        if self.K < 1:
            raise DomainError(f"hop radius K must be >= 1, got {self.K}")
        if self.l < 1:
            raise DomainError(f"walk length l must be >= 1, got {self.l}")
        if self.agg not in AGGREGATIONS:
            raise DomainError(f"agg must be one of {AGGREGATIONS}, got {self.agg!r}")
        if self.scope not in SCOPES:
            raise DomainError(f"scope must be one of {SCOPES}, got {self.scope!r}")

    @property
    def width(self) -> int:
        return self.l + 2 * self.K * self.l

    def to_dict(self) -> dict:
        return {"K": self.K, "l": self.l, "agg": self.agg, "scope": self.scope}


@dataclass(frozen=True)
class SubstructureFeatures:
    node: int
    K: int
    l: int
    f1: np.ndarray
    f2: np.ndarray
    f3: np.ndarray
    combined: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        combined = np.concatenate([self.f1, self.f2.ravel(), self.f3.ravel()])
        combined.setflags(write=False)
        object.__setattr__(self, "combined", combined)


def _walk_features(local: Graph, root: int, dist: np.ndarray, node: int, spec: EncodingSpec) -> SubstructureFeatures:
    """f1/f2/f3 of `root` on `local`, hop classes taken from `dist`"""
    K, l = spec.K, spec.l
    hops = [np.flatnonzero(dist == k) for k in range(1, K + 1)]
    sources = np.concatenate([[root], *hops]).astype(np.int64)
    # Row slice of each hop inside `sources`.
    bounds = np.cumsum([1] + [len(h) for h in hops])

    f1 = np.zeros(l)
    f2 = np.zeros((K, l))
    f3 = np.zeros((K, l))
    walk = RandomWalk(local)
    for t, rows in walk.walk(sources, l):
        f1[t - 1] = rows[0, root]
        for k, hop in enumerate(hops):
            if not len(hop):
                continue
            f2[k, t - 1] = aggregate(rows[0, hop], spec.agg)
            within = rows[bounds[k]:bounds[k + 1]][:, hop]
            off_diagonal = within[~np.eye(len(hop), dtype=bool)]
            f3[k, t - 1] = aggregate(off_diagonal, spec.agg)

    return SubstructureFeatures(node=node, K=K, l=l, f1=f1, f2=f2, f3=f3)


def encode_with(g: Graph, u: int, spec: EncodingSpec) -> SubstructureFeatures:
    if not 0 <= u < g.n:
        raise IndexError(f"node {u} out of range for n={g.n}")
    if spec.scope == "egonet":
        ego = extract_egonet(g, u, spec.K)
        return _walk_features(ego.local, 0, ego.distances, u, spec)
    return _walk_features(g, u, bfs_distances(g, u, spec.K), u, spec)


def encode_node(
    g: Graph,
    u: int,
    K: int,
    l: int,
    agg: str = "mean",
    scope: str = "graph",
) -> SubstructureFeatures:
    """Substructure encoding f(G_u^K, G) of node u"""
    return encode_with(g, u, EncodingSpec(K=K, l=l, agg=agg, scope=scope))


def _encode_chunk(g: Graph, nodes: Sequence[int], spec: EncodingSpec) -> List[SubstructureFeatures]:
    return [encode_with(g, u, spec) for u in nodes]


def encode_all(g: Graph, spec: EncodingSpec, pool: Optional[WorkerPool] = None) -> List[SubstructureFeatures]:
    """Features of every node, in node order"""
    pool = pool_or_serial(pool)
    chunk = max(1, -(-g.n // (pool.threads * 4)))
    chunks = [range(start, min(start + chunk, g.n)) for start in range(0, g.n, chunk)]
    results = pool.starmap(_encode_chunk, [(g, list(nodes), spec) for nodes in chunks])
    features = [feat for part in results for feat in part]
    logger.debug(f"Encoded {len(features)} node(s) of {g!r} with {spec}")
    return features


def encode_graph(
    g: Graph,
    K: int,
    l: int,
    agg: str = "mean",
    scope: str = "graph",
    pool: Optional[WorkerPool] = None,
) -> List[SubstructureFeatures]:
    return encode_all(g, EncodingSpec(K=K, l=l, agg=agg, scope=scope), pool)


def feature_matrix(features: Sequence[SubstructureFeatures]) -> np.ndarray:
    if not features:
        return np.zeros((0, 0))
    return np.stack([feat.combined for feat in features])
