"""
Color refinement: 1-WL, K-hop 1-WL, Subgraph 1-WL and SEK 1-WL
"""

from .hashing import ColorHasher, quantize, DEFAULT_HASH_KEY, DEFAULT_QUANTIZE_DIGITS
from .results import (
    ColorAssignment,
    GraphFingerprint,
    RefinementResult,
    canonical_partition,
    fingerprint,
    refines,
)
from .algorithms import (
    AlgorithmSpec,
    ALGORITHMS,
    ALGORITHM_GRAMMAR,
    SUBGRAPH_VARIANTS,
    VARIANT_ALIASES,
    run_rounds,
    wl1,
    khop_wl,
    subgraph_wl,
    sek_wl,
    refine,
    parse_algorithm,
    parse_suite,
)
from .trace import trace_payload

__all__ = [
    "ColorHasher",
    "quantize",
    "DEFAULT_HASH_KEY",
    "DEFAULT_QUANTIZE_DIGITS",
    "ColorAssignment",
    "GraphFingerprint",
    "RefinementResult",
    "canonical_partition",
    "fingerprint",
    "refines",
    "AlgorithmSpec",
    "ALGORITHMS",
    "ALGORITHM_GRAMMAR",
    "SUBGRAPH_VARIANTS",
    "VARIANT_ALIASES",
    "run_rounds",
    "wl1",
    "khop_wl",
    "subgraph_wl",
    "sek_wl",
    "refine",
    "parse_algorithm",
    "parse_suite",
    "trace_payload",
]
