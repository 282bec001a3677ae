import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .hashing import DEFAULT_QUANTIZE_DIGITS, ColorHasher, quantize
from .results import ColorAssignment, RefinementResult, fingerprint
from ..ego import bfs_distances, extract_egonet, hop_layers
from ..encoding import EncodingSpec, encode_all
from ..graph import Graph
from ..utils.errors import DomainError, UsageError
from ..utils.pool import WorkerPool, pool_or_serial

logger = logging.getLogger(__name__)

ALGORITHMS = ("wl1", "khop", "subgraph", "sek")
SUBGRAPH_VARIANTS = ("encoded", "nested")
VARIANT_ALIASES = {"eq5": "encoded"}

ALGORITHM_GRAMMAR = (
    "name[:key=value,...] with name in wl1, khop, subgraph, sek; e.g. 'wl1', 'khop:K=2', "
    "'subgraph:K=2,variant=nested' (variants: encoded, nested; eq5 = encoded), "
    "'sek:K=2,l=6,agg=mean,radius=1,scope=egonet'"
)

RoundUpdate = Callable[[np.ndarray, int], List[int]]


def run_rounds(n: int, update: RoundUpdate, T: int, hasher: ColorHasher) -> Tuple[List[ColorAssignment], int, bool]:
    """Iterate `update` from the uniform coloring until the partition stops splitting.

    Every update hashes the previous color of a node into its new color, so
    partitions only ever refine and an unchanged class count means an
    unchanged partition.
    """
    if T < 1:
        raise DomainError(f"round limit T must be >= 1, got {T}")

    history = [ColorAssignment(colors=np.full(n, hasher.initial_color(), dtype=np.uint64), iteration=0)]
    for t in range(1, T + 1):
        previous = history[-1]
        colors = ColorAssignment(colors=np.array(update(previous.colors, t), dtype=np.uint64), iteration=t)
        history.append(colors)
        logger.debug(f"round {t}: {colors.num_classes} color class(es)")
        if colors.num_classes == previous.num_classes:
            return history, t - 1, True
    return history, T, False


def _hop_tables(g: Graph, K: int) -> List[List[np.ndarray]]:
    return [hop_layers(bfs_distances(g, v, K), K) for v in range(g.n)]


def _hop_multisets(colors: np.ndarray, hops: Sequence[np.ndarray]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(tuple(int(c) for c in np.sort(colors[hop])) for hop in hops)


def _finish(
    algorithm: str,
    params: Dict[str, Any],
    g: Graph,
    update: RoundUpdate,
    T: int,
    hasher: ColorHasher,
) -> RefinementResult:
    history, stable_at, stabilized = run_rounds(g.n, update, T, hasher)
    result = RefinementResult(
        algorithm=algorithm,
        params=params,
        n=g.n,
        history=history,
        stable_at=stable_at,
        stabilized=stabilized,
    )
    result.fingerprint = fingerprint(result, hasher)
    logger.debug(
        f"{algorithm} {params} on {g!r}: stable_at={stable_at}, "
        f"{result.final.num_classes} class(es), fingerprint {result.fingerprint.hex}"
    )
    return result


def khop_wl(g: Graph, K: int, T: int, hasher: Optional[ColorHasher] = None) -> RefinementResult:
    """K-hop 1-WL: one multiset per exact hop distance, in hop order"""
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    hasher = hasher or ColorHasher()
    hops = _hop_tables(g, K)

    def update(prev: np.ndarray, t: int) -> List[int]:
        return [hasher((int(prev[v]), _hop_multisets(prev, hops[v]))) for v in range(g.n)]

    return _finish("khop", {"K": K, "T": T}, g, update, T, hasher)


def wl1(g: Graph, T: int, hasher: Optional[ColorHasher] = None) -> RefinementResult:
    """Classic color refinement; hashes exactly what khop_wl does with K = 1"""
    result = khop_wl(g, 1, T, hasher)
    result.algorithm = "wl1"
    result.params = {"T": T}
    return result


def _static_encodings(
    g: Graph,
    encoding: EncodingSpec,
    digits: int,
    pool: Optional[WorkerPool],
) -> List[Tuple[int, ...]]:
    return [quantize(feat.combined, digits) for feat in encode_all(g, encoding, pool)]


def sek_wl(
    g: Graph,
    K: int,
    l: int,
    T: int,
    agg: str = "mean",
    encoding: Optional[EncodingSpec] = None,
    hasher: Optional[ColorHasher] = None,
    digits: int = DEFAULT_QUANTIZE_DIGITS,
    pool: Optional[WorkerPool] = None,
) -> RefinementResult:
    """K-hop refinement enriched with a node's own encoding and its ego-net's encodings.

    `encoding` defaults to a walk over each node's own 1-hop ego-net; f is
    computed once and every round reuses the same digest of
    (f(v), multiset of f(u) for u in the K-ball of v).
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    encoding = encoding or EncodingSpec(K=1, l=l, agg=agg, scope="egonet")
    hasher = hasher or ColorHasher()
    hops = _hop_tables(g, K)
    encoded = _static_encodings(g, encoding, digits, pool)

    static = []
    for v in range(g.n):
        context = tuple(sorted(encoded[u] for hop in hops[v] for u in hop))
        static.append(hasher(("sek", encoded[v], context)))

    def update(prev: np.ndarray, t: int) -> List[int]:
        return [hasher((int(prev[v]), static[v], _hop_multisets(prev, hops[v]))) for v in range(g.n)]

    params = {"K": K, "l": l, "T": T, "agg": agg, "encoding": encoding.to_dict(), "digits": digits}
    return _finish("sek", params, g, update, T, hasher)


def _nested_colors(
    g: Graph,
    nodes: Sequence[int],
    K: int,
    prev: np.ndarray,
    hasher: ColorHasher,
) -> List[int]:
    """γ(G_v^K) for each v: 1-WL to stability inside the ego-net, then a multiset pool"""
    pooled = []
    for v in nodes:
        ego = extract_egonet(g, v, K)
        local = ego.local
        start = [hasher(("ego", int(d), int(prev[w]))) for w, d in ego.members]
        colors = np.array(start, dtype=np.uint64)
        for _ in range(max(1, len(ego))):
            refined = np.array(
                [
                    hasher((int(colors[w]), tuple(int(c) for c in np.sort(colors[local.neighbors(w)]))))
                    for w in range(local.n)
                ],
                dtype=np.uint64,
            )
            settled = len(np.unique(refined)) == len(np.unique(colors))
            colors = refined
            if settled:
                break
        pooled.append(hasher(("pool", hasher.multiset(colors))))
    return pooled


def subgraph_wl(
    g: Graph,
    K: int,
    T: int,
    variant: str = "encoded",
    l: int = 6,
    agg: str = "mean",
    encoding: Optional[EncodingSpec] = None,
    hasher: Optional[ColorHasher] = None,
    digits: int = DEFAULT_QUANTIZE_DIGITS,
    pool: Optional[WorkerPool] = None,
) -> RefinementResult:
    """Subgraph 1-WL.

    variant="encoded" hashes the node's own substructure encoding next to its
    hop multisets; variant="nested" hashes a pooled 1-WL run over the
    extracted ego-net, whose nodes start from (hop distance, current color).
    """
    if K < 1:
        raise DomainError(f"K must be >= 1, got {K}")
    variant = VARIANT_ALIASES.get(variant, variant)
    if variant not in SUBGRAPH_VARIANTS:
        raise DomainError(f"variant must be one of {SUBGRAPH_VARIANTS}, got {variant!r}")
    hasher = hasher or ColorHasher()

    if variant == "nested":
        workers = pool_or_serial(pool)
        chunk = max(1, -(-g.n // (workers.threads * 4)))
        chunks = [list(range(s, min(s + chunk, g.n))) for s in range(0, g.n, chunk)]

        def update(prev: np.ndarray, t: int) -> List[int]:
            parts = workers.starmap(_nested_colors, [(g, nodes, K, prev, hasher) for nodes in chunks])
            pooled = [c for part in parts for c in part]
            return [hasher((int(prev[v]), pooled[v])) for v in range(g.n)]

        return _finish("subgraph", {"K": K, "T": T, "variant": variant}, g, update, T, hasher)

    encoding = encoding or EncodingSpec(K=1, l=l, agg=agg, scope="egonet")
    hops = _hop_tables(g, K)
    static = [hasher(("encoded", code)) for code in _static_encodings(g, encoding, digits, pool)]

    def update(prev: np.ndarray, t: int) -> List[int]:
        return [hasher((int(prev[v]), static[v], _hop_multisets(prev, hops[v]))) for v in range(g.n)]

    params = {"K": K, "T": T, "variant": variant, "encoding": encoding.to_dict(), "digits": digits}
    return _finish("subgraph", params, g, update, T, hasher)


@dataclass(frozen=True)
class AlgorithmSpec:
    """One member of the refinement family with its parameters"""
    name: str
    K: int = 1
    l: int = 6
    agg: str = "mean"
    variant: str = "encoded"
    radius: int = 1
    scope: str = "egonet"

    def __post_init__(self):
        if self.name not in ALGORITHMS:
            raise UsageError(f"unknown algorithm {self.name!r}; grammar: {ALGORITHM_GRAMMAR}")
        object.__setattr__(self, "variant", VARIANT_ALIASES.get(self.variant, self.variant))
        if self.variant not in SUBGRAPH_VARIANTS:
            raise UsageError(f"unknown subgraph variant {self.variant!r}; expected one of {SUBGRAPH_VARIANTS}")

    @property
    def encoding(self) -> EncodingSpec:
        """Encoding parameters for the subgraph and sek families."""
        return EncodingSpec(K=self.radius, l=self.l, agg=self.agg, scope=self.scope)

    @property
    def label(self) -> str:
        """Canonical text form, parseable by parse_algorithm."""
        if self.name == "wl1":
            return "wl1"
        if self.name == "khop":
            return f"khop:K={self.K}"
        if self.name == "subgraph" and self.variant == "nested":
            return f"subgraph:K={self.K},variant=nested"
        head = f"{self.name}:K={self.K}"
        if self.name == "subgraph":
            head += ",variant=encoded"
        return f"{head},l={self.l},agg={self.agg},radius={self.radius},scope={self.scope}"

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view used in report configs."""
        data: Dict[str, Any] = {"name": self.name, "label": self.label}
        if self.name != "wl1":
            data["K"] = self.K
        if self.name == "sek" or (self.name == "subgraph" and self.variant == "encoded"):
            data["encoding"] = self.encoding.to_dict()
        if self.name == "subgraph":
            data["variant"] = self.variant
        return data

    def __str__(self) -> str:
        return self.label


_SPEC_FIELDS: Dict[str, type] = {
    "K": int,
    "l": int,
    "agg": str,
    "variant": str,
    "radius": int,
    "scope": str,
}


def parse_algorithm(text: str, defaults: Optional[Dict[str, Any]] = None) -> AlgorithmSpec:
    """Parse one algorithm spec such as 'sek:K=2,l=6'"""
    name, _, arg_text = text.strip().partition(":")
    name = name.strip()
    if name not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {name!r}; grammar: {ALGORITHM_GRAMMAR}")

    params: Dict[str, Any] = {k: v for k, v in (defaults or {}).items() if k in _SPEC_FIELDS}
    if name == "wl1":
        params["K"] = 1
    for item in filter(None, (part.strip() for part in arg_text.split(","))):
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or key not in _SPEC_FIELDS:
            raise UsageError(f"bad parameter {item!r} in {text!r}; grammar: {ALGORITHM_GRAMMAR}")
        try:
            params[key] = _SPEC_FIELDS[key](value.strip())
        except ValueError:
            raise UsageError(f"parameter {key!r} expects {_SPEC_FIELDS[key].__name__}, got {value!r}")

    if name == "wl1" and params.get("K", 1) != 1:
        raise UsageError("wl1 takes no hop radius")
    return AlgorithmSpec(name=name, **params)


def parse_suite(text: str, defaults: Optional[Dict[str, Any]] = None) -> List[AlgorithmSpec]:
    """Split a comma separated suite; a part without '=' starts a new algorithm"""
    groups: List[str] = []
    for part in (p.strip() for p in text.split(",")):
        if not part:
            continue
        head = part.partition(":")[0].strip()
        if head in ALGORITHMS or not groups:
            groups.append(part)
        else:
            groups[-1] += "," + part
    if not groups:
        raise UsageError(f"empty algorithm suite; grammar: {ALGORITHM_GRAMMAR}")
    return [parse_algorithm(group, defaults) for group in groups]


def refine(
    g: Graph,
    spec: AlgorithmSpec,
    T: int,
    hasher: Optional[ColorHasher] = None,
    digits: int = DEFAULT_QUANTIZE_DIGITS,
    pool: Optional[WorkerPool] = None,
) -> RefinementResult:
    """Dispatch to the refinement named by spec."""
    if spec.name == "wl1":
        return wl1(g, T, hasher)
    if spec.name == "khop":
        return khop_wl(g, spec.K, T, hasher)
    if spec.name == "subgraph":
        return subgraph_wl(
            g, spec.K, T, variant=spec.variant, l=spec.l, agg=spec.agg,
            encoding=spec.encoding, hasher=hasher, digits=digits, pool=pool,
        )
    return sek_wl(
        g, spec.K, spec.l, T, agg=spec.agg, encoding=spec.encoding,
        hasher=hasher, digits=digits, pool=pool,
    )
