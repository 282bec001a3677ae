import logging
import os
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from .graph import EdgeCleanup, Graph, GraphId, canonical_pairs
from ..utils.errors import CapabilityError, GraphFormatError, GraphLoadError

logger = logging.getLogger(__name__)

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_NODES = 1 << 18
_MAX_NODE_ID = 1 << 32
_SIX_BITS = np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)

FORMAT_BY_SUFFIX = {
    ".el": "el",
    ".edges": "el",
    ".txt": "el",
    ".g6": "g6",
    ".graph6": "g6",
}

TextLike = Union[str, bytes]


def _as_text(data: TextLike) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"input is not valid UTF-8: {e}") from e
    return data


def parse_edge_list(data: TextLike) -> Tuple[Graph, EdgeCleanup]:
    """Parse an edge list and report what was dropped.

    Lines are `<u> <v>` pairs of 0-indexed ids; `#` starts a comment and an
    optional first line `n=<int>` fixes the node count. Without the header n
    is one more than the largest id seen.
    """
    declared_n: Optional[int] = None
    pairs: List[Tuple[int, int]] = []
    seen_content = False

    for lineno, raw in enumerate(_as_text(data).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        if line.startswith("n="):
            if seen_content:
                raise GraphFormatError(f"line {lineno}: 'n=' header must come before any edge")
            try:
                declared_n = int(line[2:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: invalid node count {line[2:]!r}")
            if declared_n < 0:
                raise GraphFormatError(f"line {lineno}: node count must be non-negative")
            seen_content = True
            continue

        seen_content = True
        fields = line.split()
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected two node ids, got {len(fields)} fields")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: node ids must be integers: {line!r}")
        if not (0 <= u < _MAX_NODE_ID and 0 <= v < _MAX_NODE_ID):
            raise GraphFormatError(f"line {lineno}: node ids must lie in [0, 2^32)")
        pairs.append((u, v))

    max_id = max((max(p) for p in pairs), default=-1)
    if declared_n is not None:
        if max_id >= declared_n:
            raise GraphFormatError(f"node id {max_id} out of range for declared n={declared_n}")
        n = declared_n
    else:
        n = max_id + 1

    unique, cleanup = canonical_pairs(pairs)
    return Graph.from_pairs(n, unique), cleanup


def from_edge_list(data: TextLike) -> Graph:
    graph, cleanup = parse_edge_list(data)
    if cleanup.duplicates or cleanup.self_loops:
        logger.warning(
            f"Dropped {cleanup.duplicates} duplicate edge(s) and {cleanup.self_loops} self-loop(s)"
        )
    return graph


def to_edge_list(g: Graph) -> str:
    """Edge list text; the `n=` header is written only when isolated trailing nodes need it"""
    lines = []
    pairs = g.edge_array()
    implied_n = int(pairs.max()) + 1 if len(pairs) else 0
    if implied_n != g.n:
        lines.append(f"n={g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "".join(line + "\n" for line in lines)


def _decode_size(record: bytes, index: int) -> Tuple[int, int]:
    """Return (n, header length) of one graph6 record"""
    if not record:
        raise GraphFormatError(f"record {index}: empty record")
    if record[0] != 126:
        return record[0] - 63, 1
    if len(record) >= 2 and record[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    chunk = record[start:start + width]
    if len(chunk) < width:
        raise GraphFormatError(f"record {index}: truncated size header")
    n = 0
    for byte in chunk:
        n = (n << 6) | (byte - 63)
    return n, start + width


def _upper_triangle_order(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """(u, v) with u < v in graph6 bit order: x01, x02, x12, x03, ..."""
    rows, cols = np.tril_indices(n, -1)
    return cols.astype(np.int64), rows.astype(np.int64)


def _decode_record(record: bytes, index: int) -> Graph:
    raw = np.frombuffer(record, dtype=np.uint8)
    bad = np.flatnonzero((raw < 63) | (raw > 126))
    if len(bad):
        offset = int(bad[0])
        raise GraphFormatError(
            f"record {index}: byte {int(raw[offset])} at offset {offset} outside [63, 126]"
        )

    n, header_len = _decode_size(record, index)
    total_bits = n * (n - 1) // 2
    expected = -(-total_bits // 6)
    body = raw[header_len:]
    if len(body) < expected:
        raise GraphFormatError(
            f"record {index}: truncated, expected {expected} body bytes for n={n}, found {len(body)}"
        )
    if len(body) > expected:
        raise GraphFormatError(
            f"record {index}: {len(body) - expected} unexpected trailing byte(s) for n={n}"
        )

    values = body.astype(np.int64) - 63
    bits = ((values[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:total_bits]
    us, vs = _upper_triangle_order(n)
    hit = bits.astype(bool)
    pairs = np.stack([us[hit], vs[hit]], axis=1)
    order = np.lexsort((pairs[:, 1], pairs[:, 0]))
    return Graph.from_pairs(n, pairs[order])


def from_graph6(data: TextLike) -> List[Graph]:
    """Decode every graph6 record in `data`, one per line"""
    blob = data.encode("ascii", errors="replace") if isinstance(data, str) else bytes(data)
    if blob.startswith(GRAPH6_HEADER):
        blob = blob[len(GRAPH6_HEADER):]

    graphs = []
    for line in blob.splitlines():
        record = line.strip()
        if not record:
            continue
        graphs.append(_decode_record(record, len(graphs)))
    return graphs


def _size_header(n: int) -> bytes:
    """graph6 N(n): one byte up to 62, '~' plus 3 bytes up to 258047, '~~' plus 6 bytes beyond"""
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> shift) & 0x3F) + 63 for shift in (12, 6, 0)])
    return bytes([126, 126] + [((n >> shift) & 0x3F) + 63 for shift in (30, 24, 18, 12, 6, 0)])


def to_graph6(g: Graph) -> bytes:
    """Encode `g` as one graph6 record without the trailing newline"""
    n = g.n
    if n >= GRAPH6_MAX_NODES:
        raise CapabilityError(f"graph6 encoding supports n < 2^18, got n={n}")

    header = _size_header(n)
    total_bits = n * (n - 1) // 2
    padded = -(-total_bits // 6) * 6
    bits = np.zeros(padded, dtype=np.int64)
    pairs = g.edge_array()
    if len(pairs):
        u, v = pairs[:, 0], pairs[:, 1]
        bits[v * (v - 1) // 2 + u] = 1
    body = (bits.reshape(-1, 6) @ _SIX_BITS + 63).astype(np.uint8).tobytes()
    return header + body


def infer_format(path: Union[str, Path], fmt: Optional[str] = None) -> str:
    if fmt:
        if fmt not in ("el", "g6"):
            raise GraphLoadError(str(path), f"unknown graph format {fmt!r}; expected 'el' or 'g6'")
        return fmt
    suffix = Path(path).suffix.lower()
    if suffix not in FORMAT_BY_SUFFIX:
        raise GraphLoadError(str(path), f"cannot infer graph format from extension {suffix!r}")
    return FORMAT_BY_SUFFIX[suffix]


def load_graphs(path: Union[str, Path], fmt: Optional[str] = None) -> List[Tuple[GraphId, Graph]]:
    """Load every graph stored in `path`, labeled by file stem (and record index for graph6)"""
    fmt = infer_format(path, fmt)
    try:
        with open(path, "rb") as f:
            data = f.read()
    except OSError as e:
        raise GraphLoadError(str(path), e.strerror or str(e)) from e

    stem = Path(path).stem
    try:
        if fmt == "g6":
            graphs = from_graph6(data)
        else:
            graphs = [from_edge_list(data)]
    except GraphFormatError as e:
        raise GraphLoadError(str(path), str(e)) from e

    if not graphs:
        raise GraphLoadError(str(path), "no graph records found")

    logger.info(f"Loaded {len(graphs)} graph(s) from {path}")
    if len(graphs) == 1:
        return [(GraphId(label=stem, source=str(path)), graphs[0])]
    return [
        (GraphId(label=f"{stem}#{i}", source=str(path)), graph)
        for i, graph in enumerate(graphs)
    ]


def load_graph(path: Union[str, Path], fmt: Optional[str] = None) -> Tuple[GraphId, Graph]:
    """Load a file expected to hold exactly one graph"""
    loaded = load_graphs(path, fmt)
    if len(loaded) != 1:
        raise GraphLoadError(str(path), f"expected a single graph, found {len(loaded)}")
    return loaded[0]


def dump_graph(g: Graph, fmt: str) -> bytes:
    if fmt == "g6":
        return to_graph6(g) + b"\n"
    return to_edge_list(g).encode("utf-8")


def save_graph(g: Graph, path: Union[str, Path], fmt: Optional[str] = None) -> str:
    fmt = infer_format(path, fmt)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as f:
        f.write(dump_graph(g, fmt))
    logger.info(f"Wrote {g!r} to {path} ({fmt})")
    return str(path)
