"""
Utility modules for sekwl
"""

from .errors import (
    SekwlError,
    GraphFormatError,
    GraphLoadError,
    DomainError,
    CapabilityError,
    ContractError,
    UsageError,
)
from .numeric import sequential_sum, sorted_sum, aggregate, AGGREGATIONS
from .pool import WorkerPool, pool_or_serial
from .seeds import spawn_seeds, rng_for

__all__ = [
    "SekwlError",
    "GraphFormatError",
    "GraphLoadError",
    "DomainError",
    "CapabilityError",
    "ContractError",
    "UsageError",
    "sequential_sum",
    "sorted_sum",
    "aggregate",
    "AGGREGATIONS",
    "WorkerPool",
    "pool_or_serial",
    "spawn_seeds",
    "rng_for",
]
