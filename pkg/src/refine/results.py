import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from .hashing import ColorHasher

logger = logging.getLogger(__name__)


def canonical_partition(colors: np.ndarray) -> np.ndarray:
    """Class labels numbered by first appearance, so equal partitions compare equal"""
    _, first, inverse = np.unique(colors, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.ravel()]


def refines(fine: np.ndarray, coarse: np.ndarray) -> bool:
    """True when nodes sharing a `fine` color always share a `coarse` color"""
    if len(fine) == 0:
        return True
    pairs = np.unique(np.stack([canonical_partition(fine), canonical_partition(coarse)], axis=1), axis=0)
    return len(pairs) == len(np.unique(fine))


@dataclass(frozen=True)
class ColorAssignment:
    colors: np.ndarray
    iteration: int

    def __post_init__(self):
        colors = np.asarray(self.colors, dtype=np.uint64)
        colors.setflags(write=False)
        object.__setattr__(self, "colors", colors)

    @property
    def num_classes(self) -> int:
        return len(np.unique(self.colors))

    def partition(self) -> np.ndarray:
        return canonical_partition(self.colors)

    def histogram(self) -> Counter:
        return Counter(int(c) for c in self.colors)

    def class_sizes(self) -> List[int]:
        return sorted(self.histogram().values(), reverse=True)


@dataclass(frozen=True)
class GraphFingerprint:
    value: int
    n: int

    @property
    def hex(self) -> str:
        return f"{self.value:016x}"

    def __str__(self) -> str:
        return self.hex


@dataclass
class RefinementResult:
    """Color history of one refinement run.

    `history[t]` is round t; `stable_at` is the first round whose partition
    was not split any further by the next one. When `stabilized` is false
    the run hit its round limit and `stable_at` is that limit.
    """
    algorithm: str
    params: Dict[str, Any]
    n: int
    history: List[ColorAssignment]
    stable_at: int
    stabilized: bool
    fingerprint: Optional[GraphFingerprint] = field(default=None)

    @property
    def rounds(self) -> int:
        return len(self.history) - 1

    @property
    def final(self) -> ColorAssignment:
        return self.history[-1]

    def colors_at(self, t: int) -> np.ndarray:
        return self.history[min(t, len(self.history) - 1)].colors

    def partition_at(self, t: int) -> np.ndarray:
        """Partition after round t; rounds past the last computed one repeat it"""
        return canonical_partition(self.colors_at(t))

    def partition_sizes(self) -> List[int]:
        return [assignment.num_classes for assignment in self.history]


def fingerprint(result: RefinementResult, hasher: Optional[ColorHasher] = None) -> GraphFingerprint:
    """Order-free hash of the last computed color multiset, with n mixed in"""
    hasher = hasher or ColorHasher()
    final = result.final
    value = hasher(("fingerprint", result.n, final.iteration, hasher.multiset(final.colors)))
    return GraphFingerprint(value=value, n=result.n)
