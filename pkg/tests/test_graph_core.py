"""
Tests for the graph model, file formats, generators and drawing
"""
import networkx as nx
import pytest

from conftest import complete_graph, path_graph, star_graph
from graph_core.errors import GraphFormatError, InvalidPartitionError, InvalidSubsetError, PreconditionError
from graph_core.generators import random_connected_graph, random_k_irregular_instance, random_tree
from graph_core.graph import EdgePartition, Graph, components, degree_profile
from graph_core.graph_io import format_partition, parse_graph, parse_partition, serialize_graph
from oracles import union_find_component_count


class TestGraph:
    def test_rejects_self_loop(self):
        with pytest.raises(PreconditionError):
            Graph(2, ((1, 1),))

    def test_rejects_duplicate_in_either_orientation(self):
        with pytest.raises(PreconditionError):
            Graph(2, ((0, 1), (1, 0)))

    def test_rejects_out_of_range_endpoint(self):
        with pytest.raises(PreconditionError):
            Graph(2, ((0, 2),))

    def test_degrees_and_lookup(self, p3):
        assert list(p3.degrees) == [1, 2, 1]
        assert p3.max_degree == 2
        assert p3.edge_index(2, 1) == 1
        assert p3.other_end(0, 1) == 0

    def test_merged_labels_resolve_every_name(self):
        g = Graph(2, ((0, 1),), {0: "x3=x'3", 1: "y"})
        assert g.vertex_named("x3") == g.vertex_named("x'3") == 0
        with pytest.raises(KeyError):
            g.vertex_named("missing")

    def test_induced_subgraph_maps_edges_back(self, k4):
        sub, edge_map = k4.induced_subgraph([1, 2, 3])
        assert sub.vertex_count == 3
        assert [k4.edges[e] for e in edge_map] == [(1, 2), (1, 3), (2, 3)]


class TestParse:
    def test_edge_list_path(self):
        g = parse_graph(b"3 2\n0 1\n1 2")
        assert g.vertex_count == 3
        assert g.edges == ((0, 1), (1, 2))

    def test_empty_graph(self):
        g = parse_graph(b"0 0\n")
        assert g.vertex_count == 0 and g.edge_count == 0

    def test_graph6_round_trip(self):
        g = parse_graph(b"D~{", "graph6")
        assert g.vertex_count == 5
        assert nx.is_isomorphic(g.to_networkx(), nx.from_graph6_bytes(b"D~{"))
        assert serialize_graph(g, "graph6") == b"D~{"

    def test_graph6_header_is_accepted(self):
        assert parse_graph(b">>graph6<<D~{", "graph6").edge_count == parse_graph(b"D~{", "graph6").edge_count

    @pytest.mark.parametrize(
        "text, line",
        [
            (b"3\n0 1", 1),
            (b"3 1\n0 3", 2),
            (b"3 2\n0 1\n1 0", 3),
            (b"3 1\n2 2", 2),
            (b"3 2\n0 1", 3),
            (b"3 1\n0 x", 2),
        ],
    )
    def test_edge_list_errors_carry_line(self, text, line):
        with pytest.raises(GraphFormatError) as info:
            parse_graph(text)
        assert info.value.line == line

    def test_graph6_error_carries_byte(self):
        with pytest.raises(GraphFormatError) as info:
            parse_graph(b"D~ {", "graph6")
        assert info.value.byte == 2

    def test_unknown_format(self):
        with pytest.raises(PreconditionError):
            parse_graph(b"0 0", "sparse6")


class TestSerialize:
    def test_edge_list_text(self, p3):
        assert serialize_graph(p3) == b"3 2\n0 1\n1 2"

    def test_dot_colours_each_part(self, p3):
        dot = serialize_graph(p3, "dot", EdgePartition(({0}, {1}))).decode()
        assert dot.startswith("graph G {")
        assert 'color="red"' in dot and 'color="blue"' in dot

    def test_dot_rejects_foreign_colouring(self, p3):
        with pytest.raises(InvalidPartitionError):
            serialize_graph(p3, "dot", EdgePartition(({0},)))

    @pytest.mark.parametrize("fmt", ["edge-list", "graph6"])
    def test_parse_serialize_identity_on_random_graphs(self, fmt):
        for seed in range(100):
            n = 2 + seed % 11
            m = min(n * (n - 1) // 2, n - 1 + seed % 7)
            g = random_connected_graph(n, m, seed)
            back = parse_graph(serialize_graph(g, fmt), fmt)
            assert back.vertex_count == g.vertex_count
            assert sorted(back.edges) == sorted(g.edges)

    def test_partition_text_round_trip(self, k4):
        partition = EdgePartition(({0, 5}, {1, 2, 3, 4}))
        text = format_partition(k4, partition)
        assert text.splitlines()[0] == "part 0: 0-1 2-3"
        assert parse_partition(text, k4) == partition

    def test_partition_with_unknown_edge(self, p3):
        with pytest.raises(GraphFormatError):
            parse_partition("part 0: 0-2", p3)


class TestDegreeProfile:
    def test_whole_path(self, p3):
        assert degree_profile(p3, {0, 1}) == {0: 1, 1: 2, 2: 1}

    def test_edge_induced(self, p3):
        assert degree_profile(p3, {0}) == {0: 1, 1: 1}

    def test_k4(self, k4):
        assert set(degree_profile(k4, k4.all_edges).values()) == {3}

    def test_handshake(self):
        for seed in range(30):
            g = random_connected_graph(8, 12, seed)
            subset = {e for e in range(g.edge_count) if (e * 7 + seed) % 3}
            assert sum(degree_profile(g, subset).values()) == 2 * len(subset)

    def test_invalid_subset(self, p3):
        with pytest.raises(InvalidSubsetError):
            degree_profile(p3, {5})


class TestComponents:
    def test_triangle_and_edge(self, triangle_plus_edge):
        parts = components(triangle_plus_edge, triangle_plus_edge.all_edges)
        assert sorted(len(p) for p in parts) == [1, 3]

    def test_empty_subset(self, p3):
        assert components(p3, set()) == []

    def test_matches_union_find(self):
        for seed in range(100):
            g = random_connected_graph(9, 11, seed)
            subset = {e for e in range(g.edge_count) if (e + seed) % 3 != 0}
            parts = components(g, subset)
            assert len(parts) == union_find_component_count(g, subset)
            assert set().union(*parts) == subset
            assert sum(len(p) for p in parts) == len(subset)


class TestEdgePartition:
    def test_problems_listed(self, p3):
        issues = EdgePartition(({0}, {0}, set())).problems(p3)
        assert any("empty" in i for i in issues)
        assert any("repeats" in i for i in issues)
        assert any("not covered" in i for i in issues)

    def test_from_assignment(self):
        partition = EdgePartition.from_assignment([1, 1, 0, 2])
        assert partition.parts == (frozenset({2}), frozenset({0, 1}), frozenset({3}))

    def test_from_assignment_keeps_empty_slots(self):
        assert len(EdgePartition.from_assignment([2, 2], drop_empty=False)) == 3


class TestGenerators:
    def test_random_tree(self):
        for seed in range(20):
            t = random_tree(2 + seed, seed)
            assert t.is_tree()
        assert random_tree(12, 7) == random_tree(12, 7)

    def test_random_connected_graph_respects_cap(self):
        for seed in range(20):
            g = random_connected_graph(10, 18, seed, max_degree=4)
            assert g.is_connected()
            assert g.max_degree <= 4

    @pytest.mark.parametrize("k", [2, 3])
    def test_random_k_irregular_instance_shape(self, k):
        for seed in range(10):
            g = random_k_irregular_instance(k, 3, seed)
            assert g.is_connected()
            assert g.max_degree == k + 1
            assert g.edge_count == 3 * (k + 1)


def test_draw_partition_writes_png(tmp_path, k4):
    from graph_core.drawing import draw_partition

    target = tmp_path / "k4.png"
    draw_partition(k4, EdgePartition(({0, 5}, {1, 2, 3, 4})), str(target))
    assert target.exists() and target.stat().st_size > 0


def test_helpers_build_expected_graphs():
    assert path_graph(4).edge_count == 3
    assert star_graph(3).max_degree == 3
    assert complete_graph(5).edge_count == 10
