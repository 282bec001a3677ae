import pytest

from src.graph import (
    complete,
    cycle,
    erdos_renyi,
    generate,
    generate_with_id,
    parse_generator_spec,
    path,
    random_regular,
    star,
)
from src.harness import count_substructures
from src.utils import DomainError, UsageError


def test_small_families():
    assert cycle(6).m == 6
    assert path(5).m == 4
    assert complete(5).m == 10
    s = star(5)
    assert (s.n, s.m, s.degree(0)) == (5, 4, 4)


def test_domain_guards():
    with pytest.raises(DomainError):
        cycle(2)
    with pytest.raises(DomainError):
        path(0)
    with pytest.raises(DomainError):
        erdos_renyi(5, 1.5)


@pytest.mark.parametrize("name", ["rook", "shrikhande_graph"])
def test_strongly_regular_pair(name, request):
    """Test that both constructions are 6-regular on 16 nodes with 32 triangles."""
    g = request.getfixturevalue(name)
    assert g.n == 16
    assert g.m == 48
    assert set(g.degrees().tolist()) == {6}
    assert count_substructures(g).triangles == 32


def test_neighborhoods_tell_the_pair_apart(rook, shrikhande_graph):
    """Rook neighborhoods are two triangles, Shrikhande neighborhoods a hexagon."""
    rook_nbhd = rook.subgraph(rook.neighbors(0))
    shrikhande_nbhd = shrikhande_graph.subgraph(shrikhande_graph.neighbors(0))
    assert rook_nbhd.m == shrikhande_nbhd.m == 6
    assert len(rook_nbhd.connected_components()) == 2
    assert len(shrikhande_nbhd.connected_components()) == 1


class TestRandomRegular:
    def test_regular_and_simple(self):
        g = random_regular(20, 3, seed=5)
        assert set(g.degrees().tolist()) == {3}
        assert g.m == 30

    def test_seed_determinism(self):
        assert random_regular(30, 3, seed=11) == random_regular(30, 3, seed=11)
        assert random_regular(30, 3, seed=11) != random_regular(30, 3, seed=12)

    def test_zero_degree(self):
        assert random_regular(4, 0).m == 0

    @pytest.mark.parametrize("n,r", [(5, 3), (4, 4), (-1, 2)])
    def test_infeasible(self, n, r):
        with pytest.raises(DomainError):
            random_regular(n, r)


def test_erdos_renyi_extremes():
    assert erdos_renyi(6, 0.0, 1).m == 0
    assert erdos_renyi(6, 1.0, 1) == complete(6)
    assert erdos_renyi(12, 0.3, 4) == erdos_renyi(12, 0.3, 4)


class TestSpecs:
    def test_union(self):
        g = generate("cycle:n=3+cycle:n=3")
        assert (g.n, g.m) == (6, 6)
        assert len(g.connected_components()) == 2

    def test_parse(self):
        assert parse_generator_spec("cycle:n=6 + rook4x4") == [("cycle", {"n": 6}), ("rook4x4", {})]

    def test_master_seed_fills_in(self):
        spec = "random_regular:n=10,r=3"
        assert generate(spec, seed=1) == generate(spec, seed=1)
        assert generate(spec, seed=1) == random_regular(10, 3, 1)

    def test_union_terms_get_distinct_seeds(self):
        g = generate("random_regular:n=10,r=3+random_regular:n=10,r=3", seed=4)
        first = g.subgraph(range(10))
        second = g.subgraph(range(10, 20))
        assert first == random_regular(10, 3, 4)
        assert second == random_regular(10, 3, 5)

    def test_explicit_seed_wins(self):
        assert generate("random_regular:n=10,r=3,seed=9", seed=1) == random_regular(10, 3, 9)

    def test_id(self):
        graph_id, g = generate_with_id("cycle:n=4")
        assert graph_id.label == "cycle:n=4"
        assert graph_id.source == "generator:cycle:n=4"
        assert g == cycle(4)

    @pytest.mark.parametrize("spec", ["", "bogus", "cycle:m=3", "cycle", "cycle:n=x", "cycle:n"])
    def test_usage_errors(self, spec):
        with pytest.raises(UsageError):
            generate(spec)
