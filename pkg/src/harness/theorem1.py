"""
Random-walk separation experiment on random regular graphs.

Two independent r-regular graphs are drawn per trial and one root in
each. When the roots' edge configurations differ at some hop below the
working radius K, the self-return probabilities of a 2K-step lazy walk
on their K-hop ego-nets are expected to differ too.
"""

import logging
import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..ego import edge_configurations, extract_egonet
from ..encoding import self_return_vector
from ..graph import Graph, random_regular
from ..utils.errors import DomainError
from ..utils.pool import WorkerPool, pool_or_serial
from ..utils.seeds import spawn_seeds

logger = logging.getLogger(__name__)

DEFAULT_SEPARATION_TOL = 1e-12
DEFAULT_THRESHOLD = 0.95


def k_used(n: int, r: int, epsilon: float) -> int:
    """Working radius ceil((1/2 + ε) log(2n) / log(r - 1) + 1)"""
    if r < 3:
        raise DomainError(f"radius bound needs r >= 3, got r={r}")
    if n < 1:
        raise DomainError(f"radius bound needs n >= 1, got n={n}")
    return math.ceil((0.5 + epsilon) * math.log(2 * n) / math.log(r - 1) + 1)


def check_regime(n: int, r: int) -> None:
    """3 <= r < sqrt(2 ln 2n), with n*r even and r < n"""
    if r < 3:
        raise DomainError(f"degree r={r} is below the supported regime r >= 3")
    bound = math.sqrt(2 * math.log(2 * n))
    if r >= bound:
        raise DomainError(f"degree r={r} is outside the regime r < sqrt(2 ln 2n) = {bound:.4f} for n={n}")
    if (n * r) % 2 or r >= n:
        raise DomainError(f"no simple {r}-regular graph on {n} nodes")


@dataclass
class Theorem1Trial:
    """One random regular graph, its two chosen nodes and the outcome."""
    index: int
    n: int
    r: int
    seed: int
    epsilon: float
    K_used: int
    roots: Tuple[int, int]
    edge_config_differs_at: Optional[int]
    self_return_separated: bool
    gap: float
    collision: bool

    def to_dict(self) -> Dict[str, Any]:
        """JSON line written by --trials-out."""
        data = asdict(self)
        data["roots"] = list(self.roots)
        return data


@dataclass
class Theorem1Summary:
    """Aggregate rates over all trials."""
    trials: int
    config_differing: int
    separated: int
    rate: Optional[float]
    collisions: int
    collision_rate: Optional[float]
    threshold: float
    passed: bool

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view."""
        return asdict(self)


@dataclass
class TrialOutcome:
    """How a trial ended."""
    edge_config_differs_at: Optional[int]
    self_return_separated: bool
    gap: float
    collision: bool


def theorem1_trial(g1: Graph, u: int, g2: Graph, v: int, K: int, tol: float = DEFAULT_SEPARATION_TOL) -> TrialOutcome:
    """Compare two rooted graphs by edge configurations and ego-net self-returns"""
    configs_1 = edge_configurations(g1, u, K)
    configs_2 = edge_configurations(g2, v, K)
    differs_at = next((k for k in range(K) if configs_1[k] != configs_2[k]), None)
    collision = differs_at is not None and configs_1[differs_at].edge_total == configs_2[differs_at].edge_total

    returns_1 = self_return_vector(extract_egonet(g1, u, K).local, 0, 2 * K)
    returns_2 = self_return_vector(extract_egonet(g2, v, K).local, 0, 2 * K)
    gap = float(np.max(np.abs(returns_1 - returns_2)))
    return TrialOutcome(
        edge_config_differs_at=differs_at,
        self_return_separated=gap > tol,
        gap=gap,
        collision=collision,
    )


def _run_trial(index: int, n: int, r: int, epsilon: float, seed: int, K: int, tol: float) -> Theorem1Trial:
    graph_seed_1, graph_seed_2, root_seed = spawn_seeds(seed, 3)
    g1 = random_regular(n, r, graph_seed_1)
    g2 = random_regular(n, r, graph_seed_2)
    u, v = (int(x) for x in np.random.default_rng(root_seed).integers(0, n, size=2))
    outcome = theorem1_trial(g1, u, g2, v, K, tol)
    return Theorem1Trial(
        index=index,
        n=n,
        r=r,
        seed=seed,
        epsilon=epsilon,
        K_used=K,
        roots=(u, v),
        edge_config_differs_at=outcome.edge_config_differs_at,
        self_return_separated=outcome.self_return_separated,
        gap=outcome.gap,
        collision=outcome.collision,
    )


def summarize(trials: List[Theorem1Trial], threshold: float = DEFAULT_THRESHOLD) -> Theorem1Summary:
    """Fold trial outcomes into rates and a pass flag."""
    differing = [t for t in trials if t.edge_config_differs_at is not None]
    separated = sum(1 for t in differing if t.self_return_separated)
    collisions = sum(1 for t in differing if t.collision)
    rate = separated / len(differing) if differing else None
    return Theorem1Summary(
        trials=len(trials),
        config_differing=len(differing),
        separated=separated,
        rate=rate,
        collisions=collisions,
        collision_rate=collisions / len(differing) if differing else None,
        threshold=threshold,
        passed=rate is not None and rate >= threshold,
    )


def theorem1_experiment(
    n: int,
    r: int,
    epsilon: float,
    trials: int,
    seed: int,
    tol: float = DEFAULT_SEPARATION_TOL,
    threshold: float = DEFAULT_THRESHOLD,
    pool: Optional[WorkerPool] = None,
) -> Tuple[List[Theorem1Trial], Theorem1Summary]:
    """Run seeded trials on random regular graphs and summarize them."""
    check_regime(n, r)
    if trials < 1:
        raise DomainError(f"trials must be positive, got {trials}")
    K = k_used(n, r, epsilon)
    seeds = spawn_seeds(seed, trials)
    jobs = [(i, n, r, epsilon, trial_seed, K, tol) for i, trial_seed in enumerate(seeds)]
    records = pool_or_serial(pool).starmap(_run_trial, jobs, desc="theorem1 trials")

    summary = summarize(records, threshold)
    logger.info(
        f"theorem1 n={n} r={r} eps={epsilon} K={K}: {summary.separated}/{summary.config_differing} separated, "
        f"{summary.collisions} collision(s), passed={summary.passed}"
    )
    return records, summary
