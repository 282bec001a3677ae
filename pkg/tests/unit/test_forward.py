import numpy as np
import pytest

from src.encoding import EncodingSpec, encode_all
from src.forward import (
    CombineSpec,
    MessageSpec,
    NodeState,
    SamplerSpec,
    encoding_width,
    forward_layer,
    initial_states,
    jk_node_vectors,
    jk_readout,
    run_layers,
)
from src.graph import cycle, erdos_renyi, generate, star
from src.harness import small_corpus
from src.refine import sek_wl
from src.utils import ContractError, DomainError


def features(g, K=1, l=2, scope="graph"):
    return encode_all(g, EncodingSpec(K=K, l=l, scope=scope))


def ones(g, feats):
    return initial_states(g.n, encoding_width(feats))


def test_star_layer():
    g = star(3)
    feats = features(g, K=1, l=1)
    out = forward_layer(g, ones(g, feats), feats, K=1)
    inputs = [1.0 + feat.combined for feat in feats]
    assert all(state.width == 3 for state in out)
    assert all(state.layer == 1 for state in out)
    np.testing.assert_allclose(out[0].h, np.tanh(inputs[0] + inputs[1] + inputs[2]))
    np.testing.assert_allclose(out[1].h, np.tanh(inputs[1] + inputs[0]))
    np.testing.assert_array_equal(out[1].h, out[2].h)
    assert not np.allclose(out[0].h, out[1].h)


def test_mean_messages_divide_by_row_count():
    g = star(3)
    feats = features(g, K=1, l=1)
    out = forward_layer(g, ones(g, feats), feats, K=1, message=MessageSpec(mode="mean"))
    inputs = [1.0 + feat.combined for feat in feats]
    np.testing.assert_allclose(out[0].h, np.tanh((inputs[0] + inputs[1] + inputs[2]) / 3))


class TestCombine:
    def test_geometric_weights(self):
        np.testing.assert_allclose(CombineSpec("geometric", alpha=0.5).weights(2), [0.25, 0.125])

    def test_normalized_weights_are_convex(self):
        theta = CombineSpec("geometric", alpha=0.5, normalize=True).weights(3)
        assert theta.sum() == pytest.approx(1.0)
        np.testing.assert_allclose(theta, np.array([4, 2, 1]) / 7)

    def test_sum_weights(self):
        assert CombineSpec().weights(3).tolist() == [1.0, 1.0, 1.0]

    def test_validation(self):
        with pytest.raises(DomainError):
            CombineSpec("max")
        with pytest.raises(DomainError):
            CombineSpec("geometric", alpha=0.0)
        with pytest.raises(DomainError):
            MessageSpec("max")


def test_geometric_layer_is_weighted_sum_of_hops():
    g = cycle(6)
    feats = features(g, K=1, l=2)
    plain = forward_layer(g, ones(g, feats), feats, K=2)
    weighted = forward_layer(g, ones(g, feats), feats, K=2, combine=CombineSpec("geometric", alpha=0.5))
    one_hop = forward_layer(g, ones(g, feats), feats, K=1)
    # 0.25 * hop1 + 0.125 * hop2, with hop2 = plain - hop1
    np.testing.assert_allclose(weighted[0].h, 0.125 * one_hop[0].h + 0.125 * plain[0].h)
    assert not np.allclose(plain[0].h, one_hop[0].h)


def test_states_follow_relabeling(permute):
    g = erdos_renyi(10, 0.35, 4)
    h, perm = permute(g, 2)
    before = run_layers(g, features(g, K=2, l=3), 2, K=2)
    after = run_layers(h, features(h, K=2, l=3), 2, K=2)
    for u in range(g.n):
        np.testing.assert_array_equal(before[-1][u].h, after[-1][int(perm[u])].h)
    for pool in ("sum", "mean", "concat"):
        np.testing.assert_array_equal(jk_readout(before, pool), jk_readout(after, pool))


class TestSampler:
    def test_large_cap_changes_nothing(self):
        g = erdos_renyi(10, 0.4, 2)
        feats = features(g)
        full = run_layers(g, feats, 1, K=2)
        capped = run_layers(g, feats, 1, K=2, sampler=SamplerSpec(per_hop_cap=100, seed=1))
        for a, b in zip(full[0], capped[0]):
            np.testing.assert_array_equal(a.h, b.h)

    def test_sampling_is_seeded(self):
        g = erdos_renyi(12, 0.5, 3)
        feats = features(g)
        sampler = SamplerSpec(per_hop_cap=1, seed=7)
        first = run_layers(g, feats, 2, K=2, sampler=sampler)
        second = run_layers(g, feats, 2, K=2, sampler=sampler)
        for a, b in zip(first[-1], second[-1]):
            np.testing.assert_array_equal(a.h, b.h)

    def test_sample_size(self):
        members = np.arange(10)
        chosen = SamplerSpec(per_hop_cap=3, seed=0).sample(members, layer=1, node=0, hop=1)
        assert len(chosen) == 3
        assert np.all(np.diff(chosen) > 0)

    def test_cap_must_be_positive(self):
        with pytest.raises(DomainError):
            SamplerSpec(per_hop_cap=0)


class TestContracts:
    def test_feature_count(self):
        g = cycle(4)
        feats = features(g)
        with pytest.raises(ContractError):
            forward_layer(g, ones(g, feats), feats[:3], K=1)

    def test_mixed_state_widths(self):
        g = cycle(4)
        feats = features(g)
        states = ones(g, feats)
        states[0] = NodeState(h=np.ones(2), layer=0)
        with pytest.raises(ContractError):
            forward_layer(g, states, feats, K=1)

    def test_state_width_must_match_encodings(self):
        g = cycle(4)
        with pytest.raises(ContractError):
            forward_layer(g, initial_states(4), features(g), K=1)

    def test_non_finite_state(self):
        g = cycle(4)
        feats = features(g)
        states = ones(g, feats)
        states[1] = NodeState(h=np.full(encoding_width(feats), np.nan), layer=0)
        with pytest.raises(ContractError):
            forward_layer(g, states, feats, K=1)

    def test_layer_count(self):
        g = cycle(4)
        with pytest.raises(DomainError):
            run_layers(g, features(g), 0, K=1)


class TestReadout:
    def test_width_is_constant_across_layers(self):
        g = cycle(5)
        feats = features(g, K=1, l=2)
        history = run_layers(g, feats, 3, K=2)
        assert [layer[0].width for layer in history] == [6, 6, 6]
        assert jk_node_vectors(history, "concat").shape == (5, 18)
        assert jk_readout(history, "concat").shape == (18,)

    @pytest.mark.parametrize("layers", [2, 3])
    def test_sum_and_mean_over_layers(self, layers):
        g = erdos_renyi(9, 0.4, 1)
        history = run_layers(g, features(g, K=2, l=3), layers, K=2)
        stacked = np.stack([np.stack([state.h for state in layer]) for layer in history])
        np.testing.assert_allclose(jk_node_vectors(history, "sum"), stacked.sum(axis=0))
        np.testing.assert_allclose(jk_node_vectors(history, "mean"), stacked.mean(axis=0))
        np.testing.assert_allclose(jk_readout(history, "sum"), stacked.sum(axis=(0, 1)))
        assert jk_readout(history, "mean").shape == (stacked.shape[2],)

    def test_sum_and_mean_on_one_layer(self):
        g = cycle(5)
        history = run_layers(g, features(g), 1, K=1)
        nodes = np.stack([state.h for state in history[0]])
        np.testing.assert_allclose(jk_readout(history, "sum"), nodes.sum(axis=0))
        np.testing.assert_allclose(jk_node_vectors(history, "mean"), nodes)

    def test_rejects_mixed_widths_within_a_layer(self):
        history = [initial_states(4, 2), [NodeState(h=np.ones(3), layer=1)] * 3 + [NodeState(h=np.ones(2), layer=1)]]
        with pytest.raises(ContractError):
            jk_readout(history, "concat")

    def test_separates_triangles_from_hexagon(self):
        vectors = []
        for g in (generate("cycle:n=3+cycle:n=3"), cycle(6)):
            history = run_layers(g, features(g, K=2, l=3), 1, K=2)
            vectors.append(jk_readout(history, "sum"))
        assert not np.allclose(vectors[0], vectors[1])

    def test_unknown_pool(self):
        g = cycle(5)
        with pytest.raises(ContractError):
            jk_readout(run_layers(g, features(g), 1, K=1), "max")


def test_equal_sek_colors_mean_equal_states():
    """Nodes sharing a SEK color after L + 1 rounds share their state after L layers."""
    spec = EncodingSpec(K=1, l=4, scope="egonet")
    K, L = 2, 2
    for _, g in small_corpus(seed=5):
        if g.n == 0:
            continue
        history = run_layers(g, encode_all(g, spec), L, K=K)
        colors = sek_wl(g, K, spec.l, L + 1, encoding=spec).colors_at(L + 1)
        for color in np.unique(colors):
            members = np.flatnonzero(colors == color)
            reference = history[-1][members[0]].h
            for v in members[1:]:
                np.testing.assert_allclose(history[-1][v].h, reference, atol=1e-6)
