import numpy as np
import pytest

from src.graph import Graph, GraphId, complete, cycle, erdos_renyi, generate, path, random_regular
from src.harness import (
    DiscriminationReport,
    Theorem1Trial,
    Verdict,
    check_dominance,
    count_substructures,
    counting_separation_check,
    discriminate,
    erdos_renyi_corpus,
    k_used,
    check_regime,
    summarize,
    theorem1_experiment,
    theorem1_trial,
    witness_pairs,
)
from src.refine import parse_suite
from src.utils import CapabilityError, DomainError


class TestDiscriminate:
    def test_triangles_versus_hexagon(self, hasher):
        suite = parse_suite("wl1,khop:K=2,sek:K=2,l=3")
        report = discriminate(generate("cycle:n=3+cycle:n=3"), cycle(6), suite, T=10, hasher=hasher)
        assert report.verdicts["wl1"] is Verdict.NOT_DISTINGUISHED
        assert report.distinguished("khop:K=2")
        assert report.distinguished(suite[2].label)
        assert report.certificates["khop:K=2"].iteration == 1
        assert "wl1" not in report.certificates
        assert report.violations == []

    def test_rook_versus_shrikhande(self, rook, shrikhande_graph, hasher):
        suite = parse_suite("wl1,khop:K=2,sek:K=2,l=6,subgraph:K=2,l=6")
        report = discriminate(rook, shrikhande_graph, suite, T=10, hasher=hasher)
        verdicts = {label: verdict.value for label, verdict in report.verdicts.items()}
        assert verdicts["wl1"] == "not_distinguished"
        assert verdicts["khop:K=2"] == "not_distinguished"
        assert report.distinguished(suite[2].label)
        assert report.distinguished(suite[3].label)

    def test_to_dict(self, hasher):
        ids = (GraphId("a", "memory"), GraphId("b", "memory"))
        report = discriminate(path(4), cycle(4), parse_suite("wl1"), T=5, ids=ids, hasher=hasher).to_dict()
        assert report["pair"][0] == {"label": "a", "source": "memory"}
        assert report["verdicts"] == {"wl1": "distinguished"}
        assert report["certificates"]["wl1"]["iteration"] == 1
        assert report["dominance_violations"] == []
        assert len(report["fingerprints"]["wl1"]) == 2

    def test_identical_graphs(self, hasher):
        report = discriminate(cycle(5), cycle(5), parse_suite("wl1,khop:K=2"), T=5, hasher=hasher)
        assert not any(report.distinguished(label) for label in report.verdicts)
        assert report.certificates == {}

    def test_witness_corpus_respects_dominance(self, hasher):
        for pair in witness_pairs():
            suite = parse_suite(f"wl1,khop:K={pair.K},sek:K={pair.K},l={pair.l}")
            report = discriminate(pair.first[1], pair.second[1], suite, T=10, hasher=hasher)
            assert report.violations == []
            assert report.distinguished(suite[2].label)

    def test_dominance_check_flags_weaker_winner(self):
        suite = parse_suite("wl1,khop:K=2")
        report = DiscriminationReport(pair=(GraphId("a", "x"), GraphId("b", "x")))
        report.verdicts = {"wl1": Verdict.DISTINGUISHED, "khop:K=2": Verdict.NOT_DISTINGUISHED}
        assert check_dominance(report, suite) == ["wl1 distinguishes but khop:K=2 does not"]

    def test_dominance_needs_matching_radius(self):
        suite = parse_suite("khop:K=3,sek:K=2,l=3")
        report = DiscriminationReport(pair=(GraphId("a", "x"), GraphId("b", "x")))
        report.verdicts = {suite[0].label: Verdict.DISTINGUISHED, suite[1].label: Verdict.NOT_DISTINGUISHED}
        assert check_dominance(report, suite) == []


class TestTheorem1:
    def test_working_radius(self):
        assert k_used(100, 3, 0.1) == 6

    def test_radius_domain(self):
        with pytest.raises(DomainError):
            k_used(100, 2, 0.1)

    @pytest.mark.parametrize("n,r", [(100, 4), (100, 2), (101, 3)])
    def test_regime(self, n, r):
        with pytest.raises(DomainError):
            check_regime(n, r)

    def test_regime_accepts_cubic(self):
        check_regime(100, 3)

    def test_isomorphic_roots_are_not_separated(self, permute):
        g = random_regular(40, 3, seed=2)
        h, perm = permute(g, 9)
        outcome = theorem1_trial(g, 5, h, int(perm[5]), K=3)
        assert outcome.edge_config_differs_at is None
        assert outcome.gap == 0.0
        assert not outcome.self_return_separated
        assert not outcome.collision

    def test_same_ball_same_returns(self):
        outcome = theorem1_trial(cycle(6), 0, path(5), 2, K=2)
        assert outcome.edge_config_differs_at is None
        assert outcome.gap == 0.0

    def test_collision_is_still_separated(self):
        """Square and hexagon send two edges into hop 2 in different configurations."""
        outcome = theorem1_trial(cycle(4), 0, cycle(6), 0, K=2)
        assert outcome.edge_config_differs_at == 1
        assert outcome.collision
        assert outcome.self_return_separated

    def test_experiment_is_deterministic(self):
        first, summary = theorem1_experiment(100, 3, 0.1, trials=4, seed=3)
        second, _ = theorem1_experiment(100, 3, 0.1, trials=4, seed=3)
        assert [t.to_dict() for t in first] == [t.to_dict() for t in second]
        assert summary.trials == 4
        assert all(t.K_used == 6 for t in first)
        assert [t.index for t in first] == [0, 1, 2, 3]
        assert all(t.collision <= (t.edge_config_differs_at is not None) for t in first)

    def test_experiment_needs_trials(self):
        with pytest.raises(DomainError):
            theorem1_experiment(100, 3, 0.1, trials=0, seed=0)

    def test_hundred_cubic_trials(self):
        trials, summary = theorem1_experiment(100, 3, 0.1, trials=100, seed=0)
        assert summary.trials == 100
        assert summary.config_differing > 0
        assert summary.rate >= 0.95
        assert summary.passed
        assert summary.collision_rate == pytest.approx(summary.collisions / summary.config_differing)
        assert summary.collisions == sum(t.collision for t in trials)

    def test_summarize(self):
        def trial(i, differs, separated, collision=False):
            return Theorem1Trial(i, 10, 3, 0, 0.1, 3, (0, 1), differs, separated, 0.0, collision)

        summary = summarize(
            [trial(0, 1, True), trial(1, 0, False, True), trial(2, None, False), trial(3, 2, True)],
            threshold=0.5,
        )
        assert summary.trials == 4
        assert summary.config_differing == 3
        assert summary.separated == 2
        assert summary.rate == pytest.approx(2 / 3)
        assert summary.collisions == 1
        assert summary.passed

    def test_summarize_without_differing_trials(self):
        summary = summarize([])
        assert summary.rate is None
        assert not summary.passed


class TestCounting:
    def test_complete_graph(self):
        counts = count_substructures(complete(4))
        assert counts.as_tuple() == (4, 12, 4, 3)
        assert count_substructures(complete(4), "enumerate") == counts

    def test_hexagon_has_none(self):
        assert count_substructures(cycle(6)).as_tuple() == (0, 0, 0, 0)

    def test_square(self):
        assert count_substructures(cycle(4)).four_cycles == 1

    def test_closed_form_matches_enumeration(self, rook, shrikhande_graph):
        graphs = [erdos_renyi(9, p, seed) for seed, p in enumerate((0.2, 0.4, 0.6, 0.8))]
        graphs += [rook, shrikhande_graph, Graph.empty(3)]
        for g in graphs:
            assert count_substructures(g, "closed_form") == count_substructures(g, "enumerate")

    def test_closed_form_matches_enumeration_on_random_graphs(self):
        rng = np.random.default_rng(5)
        for seed in range(100):
            g = erdos_renyi(int(rng.integers(1, 21)), float(rng.uniform(0.05, 0.7)), seed)
            assert count_substructures(g, "closed_form") == count_substructures(g, "enumerate")

    def test_enumeration_guard(self):
        with pytest.raises(CapabilityError):
            count_substructures(Graph.empty(65), "enumerate")
        with pytest.raises(CapabilityError):
            count_substructures(cycle(10), "enumerate", limit=9)
        assert count_substructures(Graph.empty(65)).triangles == 0

    def test_unknown_method(self):
        with pytest.raises(DomainError):
            count_substructures(cycle(4), "guess")

    def test_to_dict(self):
        assert count_substructures(complete(3)).to_dict() == {
            "triangles": 1,
            "tailed_triangles": 0,
            "three_stars": 0,
            "four_cycles": 0,
        }

    def test_separation_check(self, hasher):
        corpus = erdos_renyi_corpus(6, 8, 0.4, seed=1)
        report = counting_separation_check(corpus, K=2, l=4, T=5, hasher=hasher)
        assert report.graphs == 6
        assert report.pairs == 15
        assert report.separated <= report.count_distinct_pairs <= report.pairs
        assert len(report.missed) == report.count_distinct_pairs - report.separated
        if report.rate is not None:
            assert report.passed == (report.rate >= report.threshold)
        assert report.to_dict()["graphs"] == 6

    def test_separation_rate_on_fifty_graphs(self, hasher):
        corpus = erdos_renyi_corpus(50, 12, 0.3, seed=0)
        report = counting_separation_check(corpus, K=3, l=8, T=10, hasher=hasher)
        assert report.pairs == 50 * 49 // 2
        assert report.count_distinct_pairs > 0
        assert report.rate >= 0.9
        assert report.passed

    def test_corpus_is_seeded(self):
        first = erdos_renyi_corpus(3, 8, 0.4, seed=2)
        second = erdos_renyi_corpus(3, 8, 0.4, seed=2)
        assert [g for _, g in first] == [g for _, g in second]
        assert [graph_id.label for graph_id, _ in first] == ["er0", "er1", "er2"]
