import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..graph import Graph, GraphId, complete, cycle, erdos_renyi, generate, path, rook4x4, shrikhande, star
from ..utils.seeds import spawn_seeds

logger = logging.getLogger(__name__)

Labeled = Tuple[GraphId, Graph]


@dataclass(frozen=True)
class WitnessPair:
    """Two named graphs plus the K and l at which they are compared."""
    name: str
    first: Labeled
    second: Labeled
    K: int
    l: int


def motivation_pair() -> Tuple[Graph, Graph]:
    """Two graphs whose node 0 has two nodes at hop 1 and two at hop 2.

    In the first, node 0 sits on a triangle whose other corners each carry a
    pendant node; in the second, node 0 lies on a 5-cycle. One round of
    2-hop refinement cannot tell the roots apart, their ego-nets can.
    """
    tailed = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)])
    pentagon = Graph.from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
    return tailed, pentagon


def witness_pairs() -> List[WitnessPair]:
    """The fixed witness pairs used by the dominance checks."""
    tailed, pentagon = motivation_pair()
    return [
        WitnessPair(
            name="two_triangles_vs_hexagon",
            first=(GraphId("C3+C3", "generator:cycle:n=3+cycle:n=3"), generate("cycle:n=3+cycle:n=3")),
            second=(GraphId("C6", "generator:cycle:n=6"), cycle(6)),
            K=2,
            l=3,
        ),
        WitnessPair(
            name="rook_vs_shrikhande",
            first=(GraphId("rook4x4", "generator:rook4x4"), rook4x4()),
            second=(GraphId("shrikhande", "generator:shrikhande"), shrikhande()),
            K=2,
            l=6,
        ),
        WitnessPair(
            name="tailed_triangle_vs_pentagon",
            first=(GraphId("tailed_triangle", "builtin:motivation"), tailed),
            second=(GraphId("pentagon", "builtin:motivation"), pentagon),
            K=2,
            l=4,
        ),
    ]


def erdos_renyi_corpus(size: int, n: int, p: float, seed: int) -> List[Labeled]:
    """`size` G(n, p) graphs, each with its own seed split from `seed`"""
    corpus = []
    for i, graph_seed in enumerate(spawn_seeds(seed, size)):
        spec = f"erdos_renyi:n={n},p={p},seed={graph_seed}"
        corpus.append((GraphId(f"er{i}", f"generator:{spec}"), erdos_renyi(n, p, graph_seed)))
    return corpus


def small_corpus(seed: int = 0) -> List[Labeled]:
    """Mixed small graphs for invariance and dominance sweeps"""
    named = [
        ("C3", cycle(3)),
        ("C6", cycle(6)),
        ("C3+C3", generate("cycle:n=3+cycle:n=3")),
        ("P4", path(4)),
        ("S5", star(5)),
        ("K4", complete(4)),
        ("rook4x4", rook4x4()),
        ("shrikhande", shrikhande()),
    ]
    corpus = [(GraphId(label, "builtin"), g) for label, g in named]
    tailed, pentagon = motivation_pair()
    corpus += [(GraphId("tailed_triangle", "builtin"), tailed), (GraphId("pentagon", "builtin"), pentagon)]
    corpus += erdos_renyi_corpus(4, 10, 0.35, seed)
    return corpus
