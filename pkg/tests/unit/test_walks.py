import numpy as np
import pytest

from src.ego import bfs_distances
from src.encoding import RandomWalk, landing_prob_row, self_return_vector
from src.graph import Graph, complete, cycle, erdos_renyi, star
from src.utils import aggregate, sequential_sum, sorted_sum


def dense_transition(g: Graph) -> np.ndarray:
    a = g.adjacency().toarray().astype(float) + np.eye(g.n)
    return a / a.sum(axis=1, keepdims=True)


def test_triangle_spreads_evenly():
    row = landing_prob_row(cycle(3), 0, 1)
    assert row.t == 1 and row.source == 0
    np.testing.assert_allclose(row.probs, [1 / 3, 1 / 3, 1 / 3])


def test_zero_steps_is_a_point_mass():
    assert landing_prob_row(cycle(4), 2, 0).probs.tolist() == [0.0, 0.0, 1.0, 0.0]


def test_hexagon_return_after_three_steps():
    """Test that the lazy walk returns after 3 steps with probability 7/27."""
    returns = self_return_vector(cycle(6), 0, 3)
    assert returns[0] == pytest.approx(1 / 3)
    assert returns[2] == pytest.approx(7 / 27)


def test_star_center():
    returns = self_return_vector(star(5), 0, 1)
    assert returns[0] == pytest.approx(1 / 5)


def test_isolated_node_stays_put():
    assert self_return_vector(Graph.empty(1), 0, 4).tolist() == [1.0] * 4


def random_small_graphs(count=50, seed=0):
    rng = np.random.default_rng(seed)
    return [
        erdos_renyi(int(rng.integers(1, 13)), float(rng.uniform(0.1, 0.7)), i)
        for i in range(count)
    ]


def test_matches_dense_matrix_powers():
    steps = 8
    for g in random_small_graphs():
        p = dense_transition(g)
        walk = RandomWalk(g)
        for u in range(g.n):
            expected = np.eye(g.n)[u]
            for t, rows in walk.walk([u], steps):
                expected = expected @ p
                np.testing.assert_allclose(rows[0], expected, rtol=0, atol=1e-10)
                assert abs(rows[0].sum() - 1.0) <= 1e-12


def test_mass_never_leaves_the_t_ball():
    for g in random_small_graphs(seed=1):
        walk = RandomWalk(g)
        for u in range(g.n):
            dist = bfs_distances(g, u)
            for t, rows in walk.walk([u], 6):
                outside = (dist < 0) | (dist > t)
                assert np.all(rows[0][outside] == 0.0)
                assert np.all(rows[0][~outside & (dist == t)] > 0.0)


def test_rows_are_distributions():
    g = erdos_renyi(15, 0.2, 7)
    for _, rows in RandomWalk(g).walk(range(g.n), 6):
        np.testing.assert_allclose(rows.sum(axis=1), 1.0)
        assert np.all(rows >= 0)


def test_probability_stays_in_component():
    g = complete(3).disjoint_union(complete(3))
    row = landing_prob_row(g, 0, 5)
    assert row.probs[3:].tolist() == [0.0, 0.0, 0.0]


def test_returns_do_not_depend_on_numbering(permute):
    g = erdos_renyi(12, 0.35, 2)
    h, perm = permute(g, 1)
    for u in range(g.n):
        np.testing.assert_array_equal(self_return_vector(g, u, 6), self_return_vector(h, int(perm[u]), 6))


def test_argument_checks():
    walk = RandomWalk(cycle(4))
    with pytest.raises(IndexError):
        walk.row(4, 1)
    with pytest.raises(ValueError):
        walk.row(0, -1)
    with pytest.raises(ValueError):
        walk.self_returns(0, 0)


class TestNumeric:
    def test_sequential_sum_is_left_to_right(self):
        values = np.array([1e16, 1.0, -1e16])
        assert sequential_sum(values) == 0.0

    def test_sorted_sum_is_order_free(self):
        rng = np.random.default_rng(0)
        values = rng.random(50)
        assert sorted_sum(values) == sorted_sum(values[::-1])

    def test_sums_along_axis(self):
        block = np.arange(6, dtype=float).reshape(2, 3)
        assert sequential_sum(block, axis=0).tolist() == [3.0, 5.0, 7.0]
        assert sorted_sum(block, axis=1).tolist() == [3.0, 12.0]
        assert sequential_sum(np.zeros((0, 4)), axis=0).tolist() == [0.0] * 4

    def test_aggregate(self):
        assert aggregate([0.1] * 10, "sum") == 1.0
        assert aggregate([1.0, 2.0], "mean") == 1.5
        assert aggregate([], "mean") == 0.0
        with pytest.raises(ValueError):
            aggregate([1.0], "max")
