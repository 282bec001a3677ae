from typing import Any, Dict, Optional

from .results import RefinementResult


def trace_payload(result: RefinementResult, label: Optional[str] = None) -> Dict[str, Any]:
    """JSON-ready summary of a refinement run"""
    return {
        "algorithm": label or result.algorithm,
        "params": result.params,
        "n": result.n,
        "rounds": result.rounds,
        "partition_sizes": result.partition_sizes(),
        "stable_at": result.stable_at,
        "stabilized": result.stabilized,
        "final_class_sizes": result.final.class_sizes(),
        "fingerprint": result.fingerprint.hex if result.fingerprint else None,
    }
