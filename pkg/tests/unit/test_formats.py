import logging

import numpy as np
import pytest

from src.graph import (
    Graph,
    complete,
    cycle,
    erdos_renyi,
    from_edge_list,
    from_graph6,
    load_graph,
    load_graphs,
    parse_edge_list,
    path,
    save_graph,
    star,
    to_edge_list,
    to_graph6,
)
from src.graph.formats import _decode_size, _size_header
from src.utils import CapabilityError, GraphFormatError, GraphLoadError


class TestGraph6:
    def test_triangle_golden(self):
        assert to_graph6(cycle(3)) == b"Bw"

    def test_empty_golden(self):
        assert to_graph6(Graph.empty(0)) == b"?"
        assert from_graph6("?")[0].n == 0

    def test_decode_star_centered_on_last_node(self):
        """Test that 'D?{' decodes to K1,4 with node 4 as the center."""
        (g,) = from_graph6("D?{")
        assert g.n == 5
        assert set(g.edges()) == {(0, 4), (1, 4), (2, 4), (3, 4)}

    def test_decode_six_nodes(self):
        (g,) = from_graph6(b"E?~o")
        assert g.n == 6
        assert g.m == 8

    def test_header_and_multiple_records(self):
        graphs = from_graph6(b">>graph6<<Bw\nD?{\n\n")
        assert [g.n for g in graphs] == [3, 5]

    @pytest.mark.parametrize(
        "graph",
        [cycle(7), star(6), complete(5), path(2), erdos_renyi(70, 0.1, 3)],
        ids=["cycle", "star", "complete", "path", "er70"],
    )
    def test_decode_inverts_encode(self, graph):
        assert from_graph6(to_graph6(graph))[0] == graph

    def test_long_size_header(self):
        g = erdos_renyi(70, 0.1, 3)
        assert to_graph6(g)[:1] == b"~"

    @pytest.mark.parametrize(
        "n,header",
        [(0, b"?"), (62, b"}"), (63, b"~??~"), (258047, b"~}~~"), (258048, b"~~???~??"), ((1 << 18) - 1, b"~~???~~~")],
    )
    def test_size_header_forms(self, n, header):
        assert _size_header(n) == header
        assert _decode_size(header, 0) == (n, len(header))

    def test_random_graphs_survive_a_round_trip(self):
        rng = np.random.default_rng(11)
        for seed in range(100):
            n = int(rng.integers(0, 80))
            g = erdos_renyi(n, float(rng.uniform(0.05, 0.6)), seed)
            record = to_graph6(g)
            assert from_graph6(record)[0] == g
            assert to_graph6(from_graph6(record)[0]) == record

    def test_matches_networkx(self):
        nx = pytest.importorskip("networkx")
        for seed in range(5):
            g = erdos_renyi(12, 0.4, seed)
            other = nx.from_graph6_bytes(to_graph6(g))
            assert {tuple(sorted(e)) for e in other.edges()} == set(g.edges())

    def test_truncated_record(self):
        with pytest.raises(GraphFormatError, match="record 0"):
            from_graph6("B")

    def test_trailing_bytes(self):
        with pytest.raises(GraphFormatError, match="trailing"):
            from_graph6("Bww")

    def test_byte_out_of_range(self):
        with pytest.raises(GraphFormatError, match="outside"):
            from_graph6("B!")

    def test_size_guard(self):
        with pytest.raises(CapabilityError):
            to_graph6(Graph.empty(1 << 18))


class TestEdgeList:
    def test_parse_reports_cleanup(self):
        g, cleanup = parse_edge_list("0 1\n1 0\n2 2\n")
        assert g.n == 3
        assert g.m == 1
        assert cleanup.duplicates == 1
        assert cleanup.self_loops == 1

    def test_comments_and_blank_lines(self):
        g, _ = parse_edge_list("# a triangle\n\n0 1  # first\n1 2\n2 0\n")
        assert g == cycle(3)

    def test_header_fixes_node_count(self):
        g, _ = parse_edge_list("n=5\n0 1\n")
        assert g.n == 5
        assert g.degrees().tolist() == [1, 1, 0, 0, 0]

    def test_bad_field_count(self):
        with pytest.raises(GraphFormatError, match="line 2"):
            parse_edge_list("0 1\n0 1 2\n")

    def test_non_integer_ids(self):
        with pytest.raises(GraphFormatError, match="line 1"):
            parse_edge_list("a b\n")

    def test_id_beyond_declared_n(self):
        with pytest.raises(GraphFormatError, match="out of range"):
            parse_edge_list("n=2\n0 3\n")

    def test_late_header(self):
        with pytest.raises(GraphFormatError, match="header"):
            parse_edge_list("0 1\nn=4\n")

    def test_cleanup_is_logged(self, caplog):
        with caplog.at_level(logging.WARNING):
            from_edge_list("0 1\n1 0\n")
        assert "1 duplicate" in caplog.text

    def test_writer_adds_header_only_when_needed(self):
        assert to_edge_list(path(3)) == "0 1\n1 2\n"
        assert to_edge_list(Graph.from_edges(4, [(0, 1)])) == "n=4\n0 1\n"

    def test_writer_output_parses_back(self):
        g = Graph.from_edges(6, [(0, 3), (2, 4)])
        assert from_edge_list(to_edge_list(g)) == g


class TestFiles:
    def test_save_and_load_by_extension(self, tmp_path):
        g = cycle(5)
        for name in ("c5.el", "c5.g6"):
            target = tmp_path / name
            save_graph(g, str(target))
            graph_id, loaded = load_graph(str(target))
            assert loaded == g
            assert graph_id.label == "c5"

    def test_multi_record_labels(self, tmp_path):
        target = tmp_path / "pair.g6"
        target.write_bytes(b"Bw\nD?{\n")
        loaded = load_graphs(str(target))
        assert [graph_id.label for graph_id, _ in loaded] == ["pair#0", "pair#1"]
        with pytest.raises(GraphLoadError):
            load_graph(str(target))

    def test_unknown_extension(self, tmp_path):
        target = tmp_path / "graph.bin"
        target.write_text("0 1\n")
        with pytest.raises(GraphLoadError, match="extension"):
            load_graphs(str(target))
        assert load_graphs(str(target), "el")[0][1] == path(2)

    def test_missing_file(self, tmp_path):
        with pytest.raises(GraphLoadError):
            load_graphs(str(tmp_path / "missing.el"))

    def test_format_error_is_wrapped(self, tmp_path):
        target = tmp_path / "broken.el"
        target.write_text("0 1 2\n")
        with pytest.raises(GraphLoadError, match="line 1"):
            load_graphs(str(target))
