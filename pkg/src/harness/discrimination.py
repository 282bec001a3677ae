import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..graph import Graph, GraphId
from ..refine import AlgorithmSpec, ColorHasher, RefinementResult, refine
from ..refine.hashing import DEFAULT_QUANTIZE_DIGITS
from ..utils.errors import DomainError
from ..utils.pool import WorkerPool

logger = logging.getLogger(__name__)


class Verdict(Enum):
    """Outcome of comparing two fingerprints."""
    DISTINGUISHED = "distinguished"
    NOT_DISTINGUISHED = "not_distinguished"


@dataclass
class Certificate:
    """First round at which the two color histograms disagree, with one witness class"""
    iteration: int
    color: str
    size_1: int
    size_2: int

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view."""
        return {"iteration": self.iteration, "color": self.color, "size_1": self.size_1, "size_2": self.size_2}


@dataclass
class DiscriminationReport:
    """Verdicts for every algorithm on one graph pair."""
    pair: Tuple[GraphId, GraphId]
    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    certificates: Dict[str, Certificate] = field(default_factory=dict)
    fingerprints: Dict[str, Tuple[str, str]] = field(default_factory=dict)
    violations: List[str] = field(default_factory=list)

    def distinguished(self, label: str) -> bool:
        """True when the algorithm named label told the graphs apart."""
        return self.verdicts[label] is Verdict.DISTINGUISHED

    def to_dict(self) -> Dict[str, Any]:
        """JSON-ready view with verdicts and certificates."""
        return {
            "pair": [self.pair[0].to_dict(), self.pair[1].to_dict()],
            "verdicts": {label: verdict.value for label, verdict in self.verdicts.items()},
            "certificates": {label: cert.to_dict() for label, cert in self.certificates.items()},
            "fingerprints": {label: list(pair) for label, pair in self.fingerprints.items()},
            "dominance_violations": list(self.violations),
        }


def first_difference(r1: RefinementResult, r2: RefinementResult) -> Optional[Certificate]:
    """Earliest round whose color histograms differ, or None if they never do"""
    last = max(len(r1.history), len(r2.history))
    for t in range(last):
        h1 = r1.history[min(t, len(r1.history) - 1)].histogram()
        h2 = r2.history[min(t, len(r2.history) - 1)].histogram()
        if h1 == h2:
            continue
        witness = min(c for c in set(h1) | set(h2) if h1.get(c, 0) != h2.get(c, 0))
        return Certificate(
            iteration=t,
            color=f"{witness:016x}",
            size_1=h1.get(witness, 0),
            size_2=h2.get(witness, 0),
        )
    return None


def _rank(spec: AlgorithmSpec) -> Optional[int]:
    return {"wl1": 0, "khop": 1, "sek": 2}.get(spec.name)


def check_dominance(report: DiscriminationReport, suite: Sequence[AlgorithmSpec]) -> List[str]:
    """Pairs (weaker, stronger) where the weaker algorithm separates and the stronger does not.

    wl1 sits below every khop, and khop:K sits below sek at the same K.
    """
    violations = []
    for weak in suite:
        for strong in suite:
            rw, rs = _rank(weak), _rank(strong)
            if rw is None or rs is None or rw >= rs:
                continue
            if weak.name != "wl1" and weak.K != strong.K:
                continue
            if report.distinguished(weak.label) and not report.distinguished(strong.label):
                violations.append(f"{weak.label} distinguishes but {strong.label} does not")
    return violations


def discriminate(
    g1: Graph,
    g2: Graph,
    suite: Sequence[AlgorithmSpec],
    T: int = 10,
    ids: Optional[Tuple[GraphId, GraphId]] = None,
    hasher: Optional[ColorHasher] = None,
    digits: int = DEFAULT_QUANTIZE_DIGITS,
    pool: Optional[WorkerPool] = None,
) -> DiscriminationReport:
    """Run every algorithm of `suite` on both graphs with identical parameters"""
    if not suite:
        raise DomainError("algorithm suite must not be empty")
    hasher = hasher or ColorHasher()
    ids = ids or (GraphId("g1", "memory"), GraphId("g2", "memory"))
    report = DiscriminationReport(pair=ids)

    for spec in suite:
        r1 = refine(g1, spec, T, hasher=hasher, digits=digits, pool=pool)
        r2 = refine(g2, spec, T, hasher=hasher, digits=digits, pool=pool)
        separated = r1.fingerprint.value != r2.fingerprint.value
        report.verdicts[spec.label] = Verdict.DISTINGUISHED if separated else Verdict.NOT_DISTINGUISHED
        report.fingerprints[spec.label] = (r1.fingerprint.hex, r2.fingerprint.hex)
        if separated:
            certificate = first_difference(r1, r2)
            if certificate is not None:
                report.certificates[spec.label] = certificate

    report.violations = check_dominance(report, suite)
    for violation in report.violations:
        logger.error(f"Dominance violation on {ids[0].label} vs {ids[1].label}: {violation}")

    summary = ", ".join(f"{label}={verdict.value}" for label, verdict in report.verdicts.items())
    logger.info(f"{ids[0].label} vs {ids[1].label}: {summary}")
    return report
