import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from .features import EncodingSpec, SubstructureFeatures

logger = logging.getLogger(__name__)

FEATURE_FORMAT_VERSION = "1.0"


def feature_columns(K: int, l: int) -> List[str]:
    columns = ["node"]
    columns += [f"f1_t{t}" for t in range(1, l + 1)]
    columns += [f"f2_k{k}_t{t}" for k in range(1, K + 1) for t in range(1, l + 1)]
    columns += [f"f3_k{k}_t{t}" for k in range(1, K + 1) for t in range(1, l + 1)]
    return columns


def features_frame(features: Sequence[SubstructureFeatures], spec: EncodingSpec) -> pd.DataFrame:
    columns = feature_columns(spec.K, spec.l)
    frame = pd.DataFrame([list(feat.combined) for feat in features], columns=columns[1:])
    frame.insert(0, "node", [feat.node for feat in features])
    return frame


def sidecar_path(csv_path: str) -> str:
    return str(Path(csv_path).with_suffix(".json"))


def write_features(
    features: Sequence[SubstructureFeatures],
    csv_path: str,
    spec: EncodingSpec,
    graph_id: Optional[Dict[str, Any]] = None,
) -> Dict[str, str]:
    """Write the feature table as CSV plus a JSON sidecar describing it"""
    directory = os.path.dirname(os.path.abspath(csv_path))
    os.makedirs(directory, exist_ok=True)

    frame = features_frame(features, spec)
    frame.to_csv(csv_path, index=False, float_format="%.17g", lineterminator="\n")

    meta = {
        "format_version": FEATURE_FORMAT_VERSION,
        "K": spec.K,
        "l": spec.l,
        "agg": spec.agg,
        "scope": spec.scope,
        "graph_id": graph_id,
    }
    meta_path = sidecar_path(csv_path)
    with open(meta_path, "w", encoding="utf-8") as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write("\n")

    logger.info(f"Wrote {len(frame)} feature row(s) to {csv_path}")
    return {"csv": str(csv_path), "sidecar": meta_path}
