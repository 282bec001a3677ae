import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

import numpy as np

from .graph import Graph, GraphId
from ..utils.errors import DomainError, UsageError

logger = logging.getLogger(__name__)

SPEC_GRAMMAR = (
    "kind[:key=value,...] joined by '+' for disjoint unions, e.g. 'rook4x4', "
    "'cycle:n=6', 'random_regular:n=100,r=3,seed=7', 'cycle:n=3+cycle:n=3'"
)

MAX_PAIRING_RESTARTS = 100_000

# Square lattice offsets on Z4 x Z4.
_SHRIKHANDE_STEPS = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError(f"cycle needs n >= 3, got n={n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise DomainError(f"path needs n >= 1, got n={n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    if n < 0:
        raise DomainError(f"complete needs n >= 0, got n={n}")
    rows, cols = np.triu_indices(n, 1)
    return Graph.from_pairs(n, np.stack([rows, cols], axis=1))


def star(n: int) -> Graph:
    """Center 0 joined to leaves 1..n-1 (n nodes in total)"""
    if n < 1:
        raise DomainError(f"star needs n >= 1, got n={n}")
    return Graph.from_edges(n, [(0, leaf) for leaf in range(1, n)])


def rook4x4() -> Graph:
    """Rook's graph on Z4 x Z4, cell (i, j) numbered 4i + j"""
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            if a // 4 == b // 4 or a % 4 == b % 4:
                edges.append((a, b))
    return Graph.from_edges(16, edges)


def shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}"""
    edges = []
    for a in range(16):
        for b in range(a + 1, 16):
            step = ((b // 4 - a // 4) % 4, (b % 4 - a % 4) % 4)
            if step in _SHRIKHANDE_STEPS:
                edges.append((a, b))
    return Graph.from_edges(16, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return g1.disjoint_union(g2)


def random_regular(n: int, r: int, seed: int = 0) -> Graph:
    """Uniform r-regular graph from the pairing model.

    Stubs are matched by a random permutation; any matching with a
    self-loop or a repeated pair is thrown away and the whole pairing
    redrawn, which keeps the result uniform over simple r-regular graphs.
    """
    if n < 0 or r < 0:
        raise DomainError(f"random_regular needs non-negative n and r, got n={n}, r={r}")
    if (n * r) % 2:
        raise DomainError(f"no {r}-regular graph on {n} nodes: n*r must be even")
    if n and r >= n:
        raise DomainError(f"no simple {r}-regular graph on {n} nodes: r must be < n")

    rng = np.random.default_rng(seed)
    if r == 0:
        return Graph.empty(n)

    stubs = np.repeat(np.arange(n, dtype=np.int64), r)
    for attempt in range(MAX_PAIRING_RESTARTS):
        pairs = np.sort(rng.permutation(stubs).reshape(-1, 2), axis=1)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        unique = np.unique(pairs, axis=0)
        if len(unique) < len(pairs):
            continue
        logger.debug(f"random_regular(n={n}, r={r}, seed={seed}) accepted after {attempt} restart(s)")
        return Graph.from_pairs(n, unique)

    raise DomainError(
        f"random_regular(n={n}, r={r}) found no simple pairing in {MAX_PAIRING_RESTARTS} attempts"
    )


def erdos_renyi(n: int, p: float, seed: int = 0) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability must lie in [0, 1], got p={p}")
    if n < 0:
        raise DomainError(f"erdos_renyi needs n >= 0, got n={n}")
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, 1)
    keep = rng.random(len(rows)) < p
    return Graph.from_pairs(n, np.stack([rows[keep], cols[keep]], axis=1))


@dataclass(frozen=True)
class GeneratorKind:
    build: Callable[..., Graph]
    params: Dict[str, type] = field(default_factory=dict)
    seeded: bool = False


GENERATORS: Dict[str, GeneratorKind] = {
    "cycle": GeneratorKind(cycle, {"n": int}),
    "path": GeneratorKind(path, {"n": int}),
    "complete": GeneratorKind(complete, {"n": int}),
    "star": GeneratorKind(star, {"n": int}),
    "rook4x4": GeneratorKind(rook4x4),
    "shrikhande": GeneratorKind(shrikhande),
    "random_regular": GeneratorKind(random_regular, {"n": int, "r": int, "seed": int}, seeded=True),
    "erdos_renyi": GeneratorKind(erdos_renyi, {"n": int, "p": float, "seed": int}, seeded=True),
}


def parse_generator_spec(text: str) -> List[Tuple[str, Dict[str, Any]]]:
    """Split a generator spec into (kind, params) terms of a disjoint union"""
    if not text or not text.strip():
        raise UsageError(f"empty generator spec; grammar: {SPEC_GRAMMAR}")

    terms = []
    for term in text.strip().split("+"):
        kind, _, arg_text = term.strip().partition(":")
        kind = kind.strip()
        if kind not in GENERATORS:
            known = ", ".join(sorted(GENERATORS))
            raise UsageError(f"unknown generator {kind!r} (known: {known}); grammar: {SPEC_GRAMMAR}")

        schema = GENERATORS[kind].params
        params: Dict[str, Any] = {}
        for item in filter(None, (part.strip() for part in arg_text.split(","))):
            key, sep, value = item.partition("=")
            key = key.strip()
            if not sep or key not in schema:
                raise UsageError(f"bad parameter {item!r} for {kind!r}; grammar: {SPEC_GRAMMAR}")
            try:
                params[key] = schema[key](value.strip())
            except ValueError:
                raise UsageError(f"parameter {key!r} of {kind!r} expects {schema[key].__name__}, got {value!r}")

        missing = [key for key in schema if key not in params and key != "seed"]
        if missing:
            raise UsageError(f"{kind!r} is missing parameter(s) {', '.join(missing)}; grammar: {SPEC_GRAMMAR}")
        terms.append((kind, params))
    return terms


def generate(spec: str, seed: Optional[int] = None) -> Graph:
    """Build the graph named by a generator spec.

    `seed` fills in for seeded generators whose spec omits one; each
    term of a union gets its own offset so `random_regular:n=10,r=3` twice
    does not produce two copies of the same graph.
    """
    graph: Optional[Graph] = None
    for position, (kind, params) in enumerate(parse_generator_spec(spec)):
        generator = GENERATORS[kind]
        if generator.seeded and "seed" not in params:
            params = {**params, "seed": (seed or 0) + position}
        term = generator.build(**params)
        graph = term if graph is None else graph.disjoint_union(term)
    logger.debug(f"Generated {graph!r} from {spec!r}")
    return graph


def generate_with_id(spec: str, seed: Optional[int] = None) -> Tuple[GraphId, Graph]:
    return GraphId(label=spec, source=f"generator:{spec}"), generate(spec, seed)
