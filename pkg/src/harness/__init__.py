"""
Experiment drivers: discrimination, random regular separation, substructure counting
"""

from .discrimination import (
    Verdict,
    Certificate,
    DiscriminationReport,
    discriminate,
    check_dominance,
    first_difference,
)
from .theorem1 import (
    Theorem1Trial,
    Theorem1Summary,
    TrialOutcome,
    k_used,
    check_regime,
    theorem1_trial,
    theorem1_experiment,
    summarize,
)
from .counting import (
    SubstructureCounts,
    CountingSeparationReport,
    COUNT_METHODS,
    count_substructures,
    counting_separation_check,
)
from .corpus import WitnessPair, motivation_pair, witness_pairs, erdos_renyi_corpus, small_corpus

__all__ = [
    "Verdict",
    "Certificate",
    "DiscriminationReport",
    "discriminate",
    "check_dominance",
    "first_difference",
    "Theorem1Trial",
    "Theorem1Summary",
    "TrialOutcome",
    "k_used",
    "check_regime",
    "theorem1_trial",
    "theorem1_experiment",
    "summarize",
    "SubstructureCounts",
    "CountingSeparationReport",
    "COUNT_METHODS",
    "count_substructures",
    "counting_separation_check",
    "WitnessPair",
    "motivation_pair",
    "witness_pairs",
    "erdos_renyi_corpus",
    "small_corpus",
]
