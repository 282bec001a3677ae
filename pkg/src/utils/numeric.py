"""
Order-canonical floating point reductions.

Sums that feed hashes or invariance checks must not depend on node
numbering, so the terms are sorted first and added strictly left to right.
"""

import math
from typing import Iterable

import numpy as np

from .errors import DomainError

AGGREGATIONS = ("mean", "sum")


def sequential_sum(values: np.ndarray, axis: int = -1) -> np.ndarray:
    """Left-to-right sum along `axis`, independent of array shape and strides"""
    values = np.moveaxis(np.asarray(values, dtype=np.float64), axis, 0)
    if values.shape[0] == 0:
        return np.zeros(values.shape[1:], dtype=np.float64)
    acc = values[0].copy()
    for row in values[1:]:
        acc += row
    return acc


def sorted_sum(values: np.ndarray, axis: int = 0) -> np.ndarray:
    """Sum along `axis` after sorting each lane ascending"""
    return sequential_sum(np.sort(np.asarray(values, dtype=np.float64), axis=axis), axis=axis)


def aggregate(values: Iterable[float], agg: str) -> float:
    """Exact (fsum based) mean or sum; an empty collection aggregates to 0"""
    values = [float(v) for v in values]
    if not values:
        return 0.0
    total = math.fsum(values)
    if agg == "sum":
        return total
    if agg == "mean":
        return total / len(values)
    raise DomainError(f"unknown aggregation {agg!r}; expected one of {AGGREGATIONS}")
