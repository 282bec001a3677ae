import logging
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from ..graph import Graph
from ..utils.errors import DomainError
from ..utils.numeric import sequential_sum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LandingProbRow:
    """Distribution of a lazy walk started at `source` after `t` steps"""
    source: int
    t: int
    probs: np.ndarray


class RandomWalk:
    """Lazy random walk on A + I with transition matrix D̃⁻¹Ã.

    Rows are advanced by p'[v] = Σ_{w ∈ N(v) ∪ {v}} p[w] / d̃(w). The terms
    reaching each v are sorted before being added, so a node's probability
    depends on the multiset of terms and not on how nodes are numbered.
    """

    def __init__(self, g: Graph):
        self.graph = g
        self.n = g.n
        self.inv_degree = 1.0 / (g.degrees().astype(np.float64) + 1.0)

        # Row v of the gather table lists v, then its neighbors, then the
        # padding column n (always zero).
        width = int(g.degrees().max()) + 1 if g.n else 1
        gather = np.full((g.n, width), g.n, dtype=np.int64)
        for v in range(g.n):
            row = g.neighbors(v)
            gather[v, 0] = v
            gather[v, 1:len(row) + 1] = row
        self._gather = gather

    def step(self, rows: np.ndarray) -> np.ndarray:
        """Advance a (s, n) block of distributions by one step"""
        scaled = rows * self.inv_degree
        padded = np.concatenate([scaled, np.zeros((len(rows), 1))], axis=1)
        terms = padded[:, self._gather]
        terms.sort(axis=-1)
        return sequential_sum(terms, axis=-1)

    def walk(self, sources: Sequence[int], steps: int) -> Iterator[Tuple[int, np.ndarray]]:
        """Yield (t, block) for t = 1..steps, block[i] being the distribution from sources[i]"""
        rows = np.zeros((len(sources), self.n), dtype=np.float64)
        rows[np.arange(len(sources)), np.asarray(sources, dtype=np.int64)] = 1.0
        for t in range(1, steps + 1):
            rows = self.step(rows)
            yield t, rows

    def row(self, u: int, t: int) -> LandingProbRow:
        if not 0 <= u < self.n:
            raise IndexError(f"node {u} out of range for n={self.n}")
        if t < 0:
            raise DomainError(f"step count must be non-negative, got {t}")
        probs = np.zeros(self.n, dtype=np.float64)
        probs[u] = 1.0
        for _, rows in self.walk([u], t):
            probs = rows[0]
        return LandingProbRow(source=u, t=t, probs=probs)

    def self_returns(self, u: int, l: int) -> np.ndarray:
        if l < 1:
            raise DomainError(f"walk length must be positive, got {l}")
        return np.array([rows[0, u] for _, rows in self.walk([u], l)])


def landing_prob_row(g: Graph, u: int, t: int) -> LandingProbRow:
    return RandomWalk(g).row(u, t)


def self_return_vector(g: Graph, u: int, l: int) -> np.ndarray:
    """Entry t-1 is the probability of being back at u after t steps"""
    return RandomWalk(g).self_returns(u, l)
