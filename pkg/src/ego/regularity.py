import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.sparse import csgraph

from ..graph import Graph
from ..utils.errors import DomainError

logger = logging.getLogger(__name__)


def all_pairs_distances(g: Graph) -> np.ndarray:
    """n x n shortest-path distances, -1 for unreachable pairs"""
    if g.n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    dist = csgraph.shortest_path(g.adjacency(), method="D", directed=False, unweighted=True)
    out = np.full(dist.shape, -1, dtype=np.int64)
    finite = np.isfinite(dist)
    out[finite] = dist[finite].astype(np.int64)
    return out


@dataclass(frozen=True)
class IntersectionArray:
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    @property
    def D(self) -> int:
        return len(self.b)

    def to_dict(self) -> dict:
        return {"b": list(self.b), "c": list(self.c), "diameter": self.D}

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


def intersection_array(g: Graph) -> Optional[IntersectionArray]:
    """Intersection array of a connected graph, or None if it is not distance-regular.

    Checks the defining condition directly: for every ordered pair (u, v) the
    table |N^i(u) ∩ N^j(v)| must equal the table of every other pair at the
    same distance.
    """
    if g.n == 0:
        raise DomainError("intersection array of the empty graph is undefined")

    dist = all_pairs_distances(g)
    if np.any(dist < 0):
        raise DomainError("intersection array needs a connected graph")

    diameter = int(dist.max())
    width = diameter + 1
    cells = width * width
    reference = {}

    for u in range(g.n):
        keys = dist[u][None, :] * width + dist + (np.arange(g.n)[:, None] * cells)
        tables = np.bincount(keys.ravel(), minlength=g.n * cells).reshape(g.n, width, width)
        for v in range(g.n):
            d = int(dist[u, v])
            seen = reference.get(d)
            if seen is None:
                reference[d] = tables[v]
            elif not np.array_equal(seen, tables[v]):
                logger.debug(f"Not distance-regular: pair ({u}, {v}) at distance {d} breaks the table")
                return None

    b = tuple(int(reference[i][i + 1, 1]) for i in range(diameter))
    c = tuple(int(reference[i][i - 1, 1]) for i in range(1, diameter + 1))
    return IntersectionArray(b=b, c=c)


def is_distance_regular(g: Graph) -> bool:
    if g.n == 0 or not g.is_connected():
        return False
    return intersection_array(g) is not None
