"""
Tests for the branch-and-bound decomposition search
"""
import networkx as nx
import pytest

from conftest import star_graph
from exact_solver.search import SearchBudget, SolveStatus, decide, min_parts
from gadget_forge.gadgets import GadgetFamily, GadgetKind, build_gadget
from graph_core.errors import ParameterError, PreconditionError
from graph_core.generators import random_connected_graph, random_tree
from graph_core.graph import EdgePartition, Graph, degree_profile
from oracles import min_locally_irregular_parts
from predicates.part_predicates import PartPredicate, satisfies, verify_partition

REGULAR = PartPredicate.regular()
LOCALLY_IRREGULAR = PartPredicate.locally_irregular()
MATCHING = PartPredicate.matching()
REG_OR_IRR = PartPredicate.regular_or_locally_irregular()


def _assert_min_parts_matches_oracle(g):
    assert g.edge_count <= 8
    assert min_parts(g, LOCALLY_IRREGULAR).parts == min_locally_irregular_parts(g)


class TestBudget:
    def test_rejects_nonpositive_cap(self):
        with pytest.raises(ParameterError):
            SearchBudget(max_nodes=0)

    def test_rejects_nonpositive_jobs(self):
        with pytest.raises(ParameterError):
            SearchBudget(jobs=0)

    def test_exhaustion_is_reported_not_infeasible(self):
        tree = build_gadget(GadgetKind(GadgetFamily.TREE_REG_IRR3))
        outcome = decide(tree, [REG_OR_IRR] * 2, SearchBudget(max_nodes=5))
        assert outcome.status is SolveStatus.BUDGET_EXHAUSTED
        assert outcome.partition is None


class TestDecide:
    def test_single_edge_is_an_exception(self, k2):
        assert decide(k2, [LOCALLY_IRREGULAR]).status is SolveStatus.INFEASIBLE

    def test_path_is_one_irregular_part(self, p3):
        outcome = decide(p3, [LOCALLY_IRREGULAR])
        assert outcome.feasible
        assert len(outcome.partition) == 1

    def test_zero_edges_rejected(self):
        with pytest.raises(PreconditionError):
            decide(Graph(3, ()), [REGULAR])

    def test_no_predicates_rejected(self, p3):
        with pytest.raises(PreconditionError):
            decide(p3, [])

    def test_witness_parts_follow_predicate_order(self):
        tree = build_gadget(GadgetKind(GadgetFamily.TREE_T1))
        outcome = decide(tree, [REGULAR, LOCALLY_IRREGULAR])
        assert outcome.feasible
        assert verify_partition(tree, outcome.partition, [REGULAR, LOCALLY_IRREGULAR])

    def test_deterministic_witness_is_repeatable(self):
        g = random_connected_graph(8, 11, seed=3)
        budget = SearchBudget(deterministic=True)
        first = decide(g, [PartPredicate.locally_regular()] * 3, budget)
        second = decide(g, [PartPredicate.locally_regular()] * 3, budget)
        assert first.status is second.status
        assert first.partition == second.partition

    def test_parallel_status_matches_sequential(self):
        for seed in range(4):
            g = random_connected_graph(7, 9, seed=seed)
            sequential = decide(g, [REG_OR_IRR] * 2, SearchBudget())
            parallel = decide(g, [REG_OR_IRR] * 2, SearchBudget(deterministic=False, jobs=2))
            assert parallel.status is sequential.status
            if parallel.feasible:
                assert verify_partition(g, parallel.partition, [REG_OR_IRR] * 2)


class TestExtremalTrees:
    def test_regirr3_tree_needs_three_parts(self):
        tree = build_gadget(GadgetKind(GadgetFamily.TREE_REG_IRR3))
        assert tree.edge_count == 17
        assert decide(tree, [REG_OR_IRR] * 2).status is SolveStatus.INFEASIBLE
        assert decide(tree, [REG_OR_IRR] * 3).feasible
        result = min_parts(tree, REG_OR_IRR)
        assert result.parts == 3
        assert verify_partition(tree, result.witness, [REG_OR_IRR])

    def test_t1_tree_verdicts(self):
        tree = build_gadget(GadgetKind(GadgetFamily.TREE_T1))
        assert decide(tree, [LOCALLY_IRREGULAR] * 2).status is SolveStatus.INFEASIBLE
        assert decide(tree, [REGULAR] * 2).status is SolveStatus.INFEASIBLE
        outcome = decide(tree, [REGULAR, LOCALLY_IRREGULAR])
        assert outcome.feasible
        assert set(degree_profile(tree, outcome.partition.parts[0]).values()) == {1}


class TestMinParts:
    def test_star_regular(self):
        assert min_parts(star_graph(3), REGULAR).parts == 3

    def test_path_matching(self, p3):
        assert min_parts(p3, MATCHING).parts == 2

    def test_lower_bound_gadget_is_one_part_at_k1(self):
        # degrees 2, 4, 3 on the triangle, 2 at u1, leaves 1: every edge already differs
        g = build_gadget(GadgetKind(GadgetFamily.LOWER_BOUND_2K1, k=1))
        assert g.edge_count == 7
        result = min_parts(g, PartPredicate.locally_k_irregular(1))
        assert result.parts == 1
        assert result.witness.parts == (g.all_edges,)

    def test_exception_reports_infeasible(self, k2):
        result = min_parts(k2, LOCALLY_IRREGULAR)
        assert result.parts is None
        assert result.status is SolveStatus.INFEASIBLE

    def test_exhaustion_surfaces_failing_t(self):
        tree = build_gadget(GadgetKind(GadgetFamily.TREE_REG_IRR3))
        result = min_parts(tree, REG_OR_IRR, SearchBudget(max_nodes=20))
        assert result.status is SolveStatus.BUDGET_EXHAUSTED
        assert result.exhausted_at is not None

    def test_matching_monotone_in_parts(self):
        for seed in range(10):
            t = random_tree(7, seed)
            first = min_parts(t, MATCHING).parts
            for extra in range(first + 1, t.edge_count + 1):
                assert decide(t, [MATCHING] * extra).feasible

    def test_agrees_with_set_partition_oracle(self):
        checked = 0
        for nxg in nx.graph_atlas_g():
            if 1 <= nxg.number_of_edges() <= 8 and nx.is_connected(nxg):
                _assert_min_parts_matches_oracle(Graph.from_networkx(nxg))
                checked += 1
        assert checked > 100

    @pytest.mark.slow
    def test_agrees_with_oracle_beyond_the_atlas(self):
        # the atlas stops at seven vertices
        for order in (8, 9):
            for tree in nx.nonisomorphic_trees(order):
                _assert_min_parts_matches_oracle(Graph.from_networkx(tree))
        for tree in nx.nonisomorphic_trees(8):
            for u, v in list(nx.non_edges(tree)):
                unicyclic = tree.copy()
                unicyclic.add_edge(u, v)
                _assert_min_parts_matches_oracle(Graph.from_networkx(unicyclic))


class TestLowerBoundK2:
    def test_only_the_v2_v3_edge_breaks_the_gap(self):
        for k in range(2, 5):
            g = build_gadget(GadgetKind(GadgetFamily.LOWER_BOUND_2K1, k=k))
            v2, v3 = g.vertex_named("v2"), g.vertex_named("v3")
            assert (g.degree(v2), g.degree(v3)) == (2 * k + 2, 2 * k + 1)
            short = [e for e, (u, v) in enumerate(g.edges) if abs(g.degree(u) - g.degree(v)) < k]
            assert short == [g.edge_index(v2, v3)]
            assert not satisfies(g, g.all_edges, PartPredicate.locally_k_irregular(k))

    def test_two_parts_are_not_enough(self):
        g = build_gadget(GadgetKind(GadgetFamily.LOWER_BOUND_2K1, k=2))
        assert g.edge_count == 17
        assert decide(g, [PartPredicate.locally_k_irregular(2)] * 2).status is SolveStatus.INFEASIBLE

    def test_five_part_witness(self):
        g = build_gadget(GadgetKind(GadgetFamily.LOWER_BOUND_2K1, k=2))

        def edges_at(name):
            return {e for e in g.incidence[g.vertex_named(name)]}

        def edge(a, b):
            return g.edge_index(g.vertex_named(a), g.vertex_named(b))

        v1_star = edges_at("v1")
        u_stars = [edges_at(f"u{i}") for i in range(1, 4)]
        v2_star = edges_at("v2") - v1_star
        assert edge("v2", "v3") in v2_star
        partition = EdgePartition(tuple([v1_star] + u_stars + [v2_star]))
        assert verify_partition(g, partition, [PartPredicate.locally_k_irregular(2)])

    @pytest.mark.slow
    def test_solver_finds_some_decomposition_within_seven_parts(self):
        g = build_gadget(GadgetKind(GadgetFamily.LOWER_BOUND_2K1, k=2))
        pred = PartPredicate.locally_k_irregular(2)
        outcomes = []
        for t in range(5, 8):
            outcome = decide(g, [pred] * t, SearchBudget(max_nodes=2_000_000))
            outcomes.append(outcome.status)
            if outcome.feasible:
                break
        assert SolveStatus.FEASIBLE in outcomes
