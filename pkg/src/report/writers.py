import json
import logging
import os
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd

from .. import __version__

logger = logging.getLogger(__name__)

FORMAT_VERSION = "1.0"


def _json_default(value: Any) -> Any:
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def build_payload(kind: str, result: Any, run_config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """Wrap a result in the versioned report envelope.

    Only `metadata` carries run-dependent values; everything else is a
    function of the inputs and flags.
    """
    return {
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "config": run_config or {},
        "result": result,
        "metadata": {
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "tool": "sekwl",
            "version": __version__,
        },
    }


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, default=_json_default) + "\n"


def dumps_jsonl(records: Iterable[Any]) -> str:
    return "".join(json.dumps(r, sort_keys=True, default=_json_default) + "\n" for r in records)


def table_text(rows: List[Dict[str, Any]]) -> str:
    if not rows:
        return "(no rows)\n"
    return pd.DataFrame(rows).to_string(index=False) + "\n"


def write_text(text: str, path: Optional[str] = None) -> Optional[str]:
    """Write to `path`, or to standard output when no path is given"""
    if path is None or path == "-":
        sys.stdout.write(text)
        return None
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    logger.info(f"Report saved to {path}")
    return path
