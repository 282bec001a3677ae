"""
Seed splitting.

Every random choice in sekwl descends from one master seed. Children are
derived with numpy's SeedSequence so that job i of a batch receives the same
seed no matter how many workers run the batch.
"""

from typing import List

import numpy as np

_SEED_BITS = 63


def spawn_seeds(master: int, count: int) -> List[int]:
    """Derive `count` independent integer seeds from `master`"""
    children = np.random.SeedSequence(master).spawn(count)
    return [int(child.generate_state(1, dtype=np.uint64)[0]) >> (64 - _SEED_BITS) for child in children]


def rng_for(master: int, *path: int) -> np.random.Generator:
    """Generator keyed by the master seed and a path of non-negative ints"""
    return np.random.default_rng(np.random.SeedSequence([master, *path]))
