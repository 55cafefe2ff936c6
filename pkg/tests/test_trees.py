"""
Tests for tree decompositions into matchings and locally irregular parts
"""
import pytest

from conftest import path_graph, star_graph
from exact_solver.search import min_parts
from graph_core.errors import ParameterError, PreconditionError
from graph_core.generators import random_tree
from graph_core.graph import Graph
from poly_algorithms.trees import (
    is_matching_plus,
    pendant_forced_into_matching,
    pendant_tree,
    tree_delta_matchings,
    tree_matching_plus,
    tree_two_matchings_irregular,
)
from predicates.part_predicates import PartPredicate, satisfies, verify_partition

MATCHING = PartPredicate.matching()
IRREGULAR = PartPredicate.locally_irregular()


def _random_trees(count, low=2, high=60):
    return [random_tree(low + seed % (high - low + 1), seed) for seed in range(count)]


class TestMatchingPlus:
    def test_single_edge_is_one_matching(self, k2):
        partition = tree_matching_plus(k2)
        assert partition.parts == (frozenset({0}),)
        assert satisfies(k2, partition.parts[0], MATCHING)
        assert is_matching_plus(k2, set(), {0})

    def test_p4(self):
        t = path_graph(4)
        partition = tree_matching_plus(t)
        rest = partition.parts[1] if len(partition) > 1 else frozenset()
        assert is_matching_plus(t, set(partition.parts[0]), set(rest))

    def test_star(self):
        t = star_graph(4)
        partition = tree_matching_plus(t)
        assert len(partition.parts[0]) == 1
        assert satisfies(t, partition.parts[1], IRREGULAR)

    def test_rejects_non_tree(self, triangle_plus_edge):
        with pytest.raises(PreconditionError):
            tree_matching_plus(triangle_plus_edge)

    def test_rejects_edgeless(self):
        with pytest.raises(PreconditionError):
            tree_matching_plus(Graph(1, ()))

    def test_random_trees(self):
        for t in _random_trees(500):
            partition = tree_matching_plus(t)
            assert partition.problems(t) == []
            rest = partition.parts[1] if len(partition) > 1 else frozenset()
            assert is_matching_plus(t, set(partition.parts[0]), set(rest))


class TestTwoMatchingsIrregular:
    def test_p3_is_irregular(self, p3):
        partition = tree_two_matchings_irregular(p3)
        assert len(partition) == 1
        assert satisfies(p3, partition.parts[0], IRREGULAR)

    def test_p2_is_one_matching(self, k2):
        assert len(tree_two_matchings_irregular(k2)) == 1

    def test_random_trees(self):
        for t in _random_trees(500):
            partition = tree_two_matchings_irregular(t)
            assert partition.problems(t) == []
            assert len(partition) <= 3
            kinds = ["m" if satisfies(t, p, MATCHING) else "i" for p in partition]
            assert kinds.count("m") <= 2 and kinds.count("i") <= 1
            assert "i" not in kinds[:-1]
            if kinds[-1] == "i":
                assert satisfies(t, partition.parts[-1], IRREGULAR)


class TestDeltaMatchings:
    def test_star_needs_one_part_per_edge(self):
        assert len(tree_delta_matchings(star_graph(4))) == 4

    def test_p4_two_colours(self):
        assert len(tree_delta_matchings(path_graph(4))) == 2

    def test_random_trees(self):
        for t in _random_trees(500):
            partition = tree_delta_matchings(t)
            assert len(partition) == t.max_degree
            assert verify_partition(t, partition, [MATCHING])

    def test_max_degree_is_optimal_for_locally_regular(self):
        for t in _random_trees(100, 2, 11):
            assert t.edge_count <= 10
            assert min_parts(t, PartPredicate.locally_regular()).parts == t.max_degree


class TestPendantTree:
    def test_shape(self):
        g, pendant = pendant_tree()
        assert g.is_tree()
        assert g.edge_count == 12
        assert g.other_end(pendant, g.vertex_named("z")) != g.vertex_named("z")

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_pendant_edge_is_forced(self, k):
        assert pendant_forced_into_matching(k)

    @pytest.mark.parametrize("k", [1, 2])
    def test_small_k_rejected(self, k):
        with pytest.raises(ParameterError):
            pendant_forced_into_matching(k)
