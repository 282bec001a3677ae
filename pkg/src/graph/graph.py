import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
import scipy.sparse as sp

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GraphId:
    """Label and provenance of a graph in one working set"""
    label: str
    source: str

    def to_dict(self) -> dict:
        return {"label": self.label, "source": self.source}


@dataclass(frozen=True)
class EdgeCleanup:
    """What had to be dropped while canonicalizing an edge collection"""
    duplicates: int = 0
    self_loops: int = 0


def unique_pairs(pairs: np.ndarray) -> np.ndarray:
    """Sorted distinct rows of a (k, 2) array"""
    pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if not len(pairs):
        return pairs
    return np.unique(pairs, axis=0)


def canonical_pairs(edges: Iterable[Tuple[int, int]]) -> Tuple[np.ndarray, EdgeCleanup]:
    """Deduplicate undirected pairs and drop self-loops.

    Returns a (k, 2) array of pairs with u < v sorted lexicographically, plus
    the number of duplicates and self-loops that were removed.
    """
    pairs = np.asarray(list(edges) if not isinstance(edges, np.ndarray) else edges, dtype=np.int64)
    pairs = pairs.reshape(-1, 2)
    if pairs.size and pairs.min() < 0:
        raise ValueError("node ids must be non-negative")

    loops = pairs[:, 0] == pairs[:, 1]
    self_loops = int(loops.sum())
    pairs = np.sort(pairs[~loops], axis=1)

    unique = unique_pairs(pairs)
    duplicates = len(pairs) - len(unique)
    return unique, EdgeCleanup(duplicates=duplicates, self_loops=self_loops)


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph in compressed sparse row form.

    `offsets` has length n + 1 and `targets` length 2m; the neighbors of u
    are targets[offsets[u]:offsets[u + 1]], sorted ascending.
    """
    n: int
    offsets: np.ndarray
    targets: np.ndarray
    _edge_pairs: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        offsets = np.ascontiguousarray(self.offsets, dtype=np.int64)
        targets = np.ascontiguousarray(self.targets, dtype=np.int64)
        offsets.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "offsets", offsets)
        object.__setattr__(self, "targets", targets)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph over nodes 0..n-1, silently dropping duplicates and self-loops"""
        pairs, _ = canonical_pairs(edges)
        return cls.from_pairs(n, pairs)

    @classmethod
    def from_pairs(cls, n: int, pairs: np.ndarray) -> "Graph":
        """Build from canonical pairs (u < v, unique), as produced by `canonical_pairs`"""
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        if len(pairs) and pairs.max() >= n:
            raise ValueError(f"node id {int(pairs.max())} out of range for n={n}")

        sources = np.concatenate([pairs[:, 0], pairs[:, 1]])
        targets = np.concatenate([pairs[:, 1], pairs[:, 0]])
        order = np.lexsort((targets, sources))
        counts = np.bincount(sources, minlength=n) if n else np.zeros(0, dtype=np.int64)
        offsets = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=offsets[1:])
        return cls(n=n, offsets=offsets, targets=targets[order])

    @classmethod
    def empty(cls, n: int = 0) -> "Graph":
        return cls(n=n, offsets=np.zeros(n + 1, dtype=np.int64), targets=np.zeros(0, dtype=np.int64))

    @property
    def m(self) -> int:
        return len(self.targets) // 2

    def neighbors(self, u: int) -> np.ndarray:
        return self.targets[self.offsets[u]:self.offsets[u + 1]]

    def degree(self, u: int) -> int:
        return int(self.offsets[u + 1] - self.offsets[u])

    def degrees(self) -> np.ndarray:
        return np.diff(self.offsets)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return bool(i < len(row) and row[i] == v)

    def edge_array(self) -> np.ndarray:
        """(m, 2) array of edges with u < v, lexicographically sorted"""
        if self._edge_pairs is None:
            sources = np.repeat(np.arange(self.n, dtype=np.int64), self.degrees())
            mask = sources < self.targets
            pairs = np.stack([sources[mask], self.targets[mask]], axis=1)
            pairs.setflags(write=False)
            object.__setattr__(self, "_edge_pairs", pairs)
        return self._edge_pairs

    def edges(self) -> Iterator[Tuple[int, int]]:
        for u, v in self.edge_array():
            yield int(u), int(v)

    def adjacency(self) -> sp.csr_matrix:
        """Symmetric 0/1 adjacency matrix"""
        data = np.ones(len(self.targets), dtype=np.int64)
        return sp.csr_matrix((data, self.targets, self.offsets), shape=(self.n, self.n))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with node u renamed to perm[u]"""
        perm = np.asarray(perm, dtype=np.int64)
        if sorted(perm.tolist()) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        pairs = perm[self.edge_array()]
        return Graph.from_pairs(self.n, unique_pairs(np.sort(pairs, axis=1)))

    def subgraph(self, nodes: Sequence[int]) -> "Graph":
        """Induced subgraph; nodes[i] becomes local node i"""
        nodes = np.asarray(nodes, dtype=np.int64)
        local = np.full(self.n, -1, dtype=np.int64)
        local[nodes] = np.arange(len(nodes))
        pairs = self.edge_array()
        keep = (local[pairs[:, 0]] >= 0) & (local[pairs[:, 1]] >= 0)
        mapped = np.sort(local[pairs[keep]], axis=1)
        return Graph.from_pairs(len(nodes), unique_pairs(mapped))

    def connected_components(self) -> List[List[int]]:
        if self.n == 0:
            return []
        count, labels = sp.csgraph.connected_components(self.adjacency(), directed=False)
        components: List[List[int]] = [[] for _ in range(count)]
        for node, label in enumerate(labels):
            components[label].append(node)
        return sorted(components, key=lambda c: c[0])

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = other.edge_array() + self.n
        pairs = np.concatenate([self.edge_array(), shifted]) if len(shifted) else self.edge_array()
        return Graph.from_pairs(self.n + other.n, pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.offsets, other.offsets)
            and np.array_equal(self.targets, other.targets)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.targets.tobytes(), self.offsets.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"
