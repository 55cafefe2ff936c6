"""
Tests for maximum matching, perfect matching on vertex sets and 2-factors
"""
from conftest import complete_graph, cycle_graph, star_graph
from graph_core.generators import random_connected_graph
from graph_core.graph import Graph, degree_profile
from oracles import brute_force_max_matching, has_two_factor
from poly_algorithms.matching import max_matching, perfect_matching, two_factor
from predicates.part_predicates import PartPredicate, satisfies


def _is_matching(g, edges):
    return not edges or satisfies(g, edges, PartPredicate.matching())


def test_k4_has_perfect_matching(k4):
    m = max_matching(k4)
    assert len(m) == 2 and _is_matching(k4, m)


def test_odd_cycle():
    assert len(max_matching(cycle_graph(5))) == 2


def test_empty_graph():
    assert max_matching(Graph(3, ())) == frozenset()


def test_max_matching_matches_brute_force():
    for seed in range(200):
        n = 2 + seed % 11
        m = min(n * (n - 1) // 2, n - 1 + seed % 6)
        g = random_connected_graph(n, m, seed)
        found = max_matching(g)
        assert _is_matching(g, found)
        assert len(found) == brute_force_max_matching(g)


def test_perfect_matching_on_vertex_subset(p3):
    assert perfect_matching(p3, [0, 1]) == frozenset({0})
    assert perfect_matching(p3, [0, 2]) is None
    assert perfect_matching(p3) is None


def test_two_factor_of_k4_is_hamiltonian(k4):
    factor = two_factor(k4)
    assert len(factor) == 4
    assert set(degree_profile(k4, factor).values()) == {2}


def test_two_factor_absent_for_star():
    assert two_factor(star_graph(3)) is None


def test_two_factor_existence_matches_subset_enumeration():
    graphs = [cycle_graph(n) for n in range(3, 8)] + [complete_graph(4), complete_graph(5)]
    seed = 0
    while len(graphs) < 100:
        n = 3 + seed % 6
        m = min(12, n * (n - 1) // 2, n + seed % 5)
        graphs.append(random_connected_graph(n, m, seed))
        seed += 1
    for g in graphs:
        factor = two_factor(g)
        assert (factor is not None) == has_two_factor(g)
        if factor is not None:
            profile = degree_profile(g, factor)
            assert len(profile) == g.vertex_count and set(profile.values()) == {2}
