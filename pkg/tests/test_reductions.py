"""
Tests for formulas, the three reductions and the certificate converters
"""
import random

import networkx as nx
import pytest

from graph_core.errors import FormulaError, InvalidPartitionError, PreconditionError, ScaleError
from graph_core.graph import EdgePartition
from oracles import recursive_satisfiable
from predicates.part_predicates import verify_partition
from reductions.converters import (
    ReductionParams,
    assignment_to_decomposition,
    decomposition_to_assignment,
    reduce_to_graph,
    round_trip,
    variant_predicates,
)
from reductions.formula import (
    Assignment,
    Formula,
    Variant,
    brute_force_assignment,
    clause_satisfied,
    format_formula,
    parse_formula,
    random_formula,
)
from reductions.one_in_three import TREE_PREFIX

# every 3-subset of four variables: cubic, even clause count, unsatisfiable
UNSAT_ONE_IN_THREE = Formula(4, ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)), Variant.ONE_IN_THREE)


class TestFormula:
    def test_clause_semantics(self):
        assert clause_satisfied(Variant.ONE_IN_THREE, [True, False, False])
        assert not clause_satisfied(Variant.ONE_IN_THREE, [True, True, False])
        assert clause_satisfied(Variant.NAE, [True, False])
        assert not clause_satisfied(Variant.NAE, [True, True, True])
        assert clause_satisfied(Variant.TWO_IN_FOUR, [True, False, True, False])
        assert not clause_satisfied(Variant.TWO_IN_FOUR, [True, True, True, False])

    def test_parse_and_format(self):
        text = "# cubic nae\nnae 2 3\n0 1\n\n0 1\n0 1\n"
        f = parse_formula(text)
        assert f.variant is Variant.NAE
        assert f.clauses == ((0, 1),) * 3
        assert parse_formula(format_formula(f)) == f
        assert parse_formula(text.encode()) == f

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "nae 2\n0 1",
            "sat 2 1\n0 1",
            "nae two 1\n0 1",
            "nae 2 2\n0 1",
            "nae 2 1\n0 x",
            "nae 2 1\n0 2",
            "nae 2 1\n1 1",
            "nae 0 0\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(FormulaError):
            parse_formula(text)

    def test_variant_shapes(self):
        UNSAT_ONE_IN_THREE.check_variant()
        Formula(2, ((0, 1),) * 3, Variant.NAE).check_variant()
        Formula(4, ((0, 1, 2, 3),), Variant.TWO_IN_FOUR).check_variant()

    @pytest.mark.parametrize(
        "f",
        [
            Formula(3, ((0, 1, 2),), Variant.ONE_IN_THREE),
            Formula(2, ((0, 1),) * 2, Variant.NAE),
            Formula(4, ((0, 1, 2, 3), (0, 1)), Variant.TWO_IN_FOUR),
            Formula(1, (), Variant.NAE),
        ],
    )
    def test_variant_shape_errors(self, f):
        with pytest.raises(FormulaError):
            f.check_variant()

    def test_assignment_length_checked(self):
        with pytest.raises(FormulaError):
            UNSAT_ONE_IN_THREE.satisfied_by(Assignment((True,)))

    def test_complement(self):
        assert Assignment((True, False)).complement() == Assignment((False, True))
        assert str(Assignment((True, False))) == "x0=T x1=F"

    def test_single_nae_clause(self):
        a = brute_force_assignment(Formula(2, ((0, 1),), Variant.NAE))
        assert a is not None and a[0] != a[1]

    def test_unsatisfiable_one_in_three(self):
        assert brute_force_assignment(UNSAT_ONE_IN_THREE) is None

    def test_brute_force_matches_recursive_search(self):
        rng = random.Random(5)
        sizes = {Variant.ONE_IN_THREE: 3, Variant.NAE: 3, Variant.TWO_IN_FOUR: 4}
        for _ in range(50):
            variant = rng.choice(list(Variant))
            n = rng.randint(sizes[variant], 9)
            clauses = tuple(tuple(rng.sample(range(n), sizes[variant])) for _ in range(rng.randint(1, 8)))
            f = Formula(n, clauses, variant)
            found = brute_force_assignment(f)
            expected = recursive_satisfiable(clauses, n, lambda values: clause_satisfied(variant, values))
            assert (found is not None) == expected
            if found is not None:
                assert f.satisfied_by(found)

    def test_oracle_limit(self):
        f = Formula(25, ((0, 1),), Variant.NAE)
        with pytest.raises(ScaleError):
            brute_force_assignment(f)

    @pytest.mark.parametrize("variant", list(Variant))
    def test_planted_instances(self, variant):
        for seed in range(10):
            f, a = random_formula(variant, seed=seed, size=1 + seed % 2)
            f.check_variant()
            assert f.satisfied_by(a)

    def test_planted_is_seeded(self):
        assert random_formula(Variant.NAE, seed=9) == random_formula(Variant.NAE, seed=9)

    def test_size_must_be_positive(self):
        with pytest.raises(FormulaError):
            random_formula(Variant.NAE, size=0)


class TestGraphShapes:
    @pytest.mark.parametrize("alpha", [3, 4, 5])
    def test_nae_degrees(self, alpha):
        f, _ = random_formula(Variant.NAE, seed=alpha)
        g = reduce_to_graph(f, ReductionParams(alpha=alpha))
        assert g.is_bipartite()
        assert g.degree_set() <= {alpha, 2 * alpha}

    def test_nae_alpha_checked(self):
        f, _ = random_formula(Variant.NAE, seed=1)
        with pytest.raises(PreconditionError):
            reduce_to_graph(f, ReductionParams(alpha=2))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_two_in_four_degrees(self, k):
        f, _ = random_formula(Variant.TWO_IN_FOUR, seed=k)
        g = reduce_to_graph(f, ReductionParams(k=k))
        assert g.degree_set() <= {1, 2, k + 1, 2 * k + 2}
        assert 2 * k + 2 in g.degree_set()

    def test_two_in_four_k_checked(self):
        f, _ = random_formula(Variant.TWO_IN_FOUR, seed=1)
        with pytest.raises(PreconditionError):
            reduce_to_graph(f, ReductionParams(k=1))

    def test_one_in_three_structure(self):
        g = reduce_to_graph(UNSAT_ONE_IN_THREE)
        nxg = g.to_networkx()
        tree_root = g.vertex_named(f"{TREE_PREFIX}.v")
        tree = nxg.subgraph(nx.node_connected_component(nxg, tree_root))
        assert nx.is_tree(tree) and tree.number_of_edges() == 13
        outside = [v for v in range(g.vertex_count) if v not in tree]
        assert all(g.degree(v) != 2 for v in outside)
        dummies = [v for v in outside if g.label(v).endswith("~dummy")]
        assert dummies and all(g.degree(v) == 1 for v in dummies)

    def test_shape_checked_before_building(self):
        with pytest.raises(FormulaError):
            reduce_to_graph(Formula(3, ((0, 1, 2),), Variant.ONE_IN_THREE))


class TestRoundTrips:
    @pytest.mark.parametrize("variant", list(Variant))
    def test_planted_round_trips(self, variant):
        for seed in range(20):
            f, _ = random_formula(variant, seed=seed)
            result = round_trip(f)
            assert result.satisfiable
            assert f.satisfied_by(result.recovered)
            g = reduce_to_graph(f)
            assert verify_partition(g, result.partition, variant_predicates(f, g))
            assert result.solver_agrees in (None, True)

    def test_nae_with_larger_alpha(self):
        params = ReductionParams(alpha=4)
        f, a = random_formula(Variant.NAE, seed=3)
        g = reduce_to_graph(f, params)
        partition = assignment_to_decomposition(f, a, g)
        assert decomposition_to_assignment(f, g, partition) == a

    def test_unsatisfiable_round_trip(self):
        result = round_trip(UNSAT_ONE_IN_THREE)
        assert not result.satisfiable
        assert result.partition is None and result.recovered is None
        assert result.edges > 20 and result.solver_agrees is None

    def test_swapped_parts_give_the_complement(self):
        f, a = random_formula(Variant.NAE, seed=11)
        g = reduce_to_graph(f)
        partition = assignment_to_decomposition(f, a, g)
        assert decomposition_to_assignment(f, g, partition) == a
        swapped = EdgePartition(partition.parts[::-1])
        assert decomposition_to_assignment(f, g, swapped) == a.complement()

    def test_one_in_three_ignores_part_order(self):
        f, a = random_formula(Variant.ONE_IN_THREE, seed=4)
        g = reduce_to_graph(f)
        partition = assignment_to_decomposition(f, a, g)
        swapped = EdgePartition(partition.parts[::-1])
        assert decomposition_to_assignment(f, g, swapped) == decomposition_to_assignment(f, g, partition)

    def test_rejects_invalid_partition(self):
        f, _ = random_formula(Variant.NAE, seed=2)
        g = reduce_to_graph(f)
        with pytest.raises(InvalidPartitionError):
            decomposition_to_assignment(f, g, EdgePartition((g.all_edges,)))

    def test_rejects_unsatisfying_assignment(self):
        f, a = random_formula(Variant.NAE, seed=2)
        g = reduce_to_graph(f)
        wrong = Assignment((True,) * f.variable_count)
        with pytest.raises(PreconditionError):
            assignment_to_decomposition(f, wrong, g)

    def test_two_in_four_swap_flips_used_variables(self):
        f, a = random_formula(Variant.TWO_IN_FOUR, seed=11)
        g = reduce_to_graph(f)
        partition = assignment_to_decomposition(f, a, g)
        first = decomposition_to_assignment(f, g, partition)
        second = decomposition_to_assignment(f, g, EdgePartition(partition.parts[::-1]))
        for x, clauses in enumerate(f.occurrences()):
            if clauses:
                assert first[x] == a[x] and second[x] != a[x]
            else:
                assert not first[x] and not second[x]
