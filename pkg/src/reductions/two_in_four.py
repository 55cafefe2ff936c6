"""
Monotone two-in-four formulas to graphs that split into two locally
k-irregular parts exactly when the formula is satisfiable
"""
import logging
from typing import Dict, List

from gadget_forge.builder import GadgetBuilder
from gadget_forge.gadgets import add_gadget_a, add_gadget_b, main_vertex, scoped
from graph_core.errors import PreconditionError
from graph_core.graph import EdgePartition, Graph
from predicates.part_predicates import PartPredicate, verify_partition
from reductions.formula import Assignment, Formula

logger = logging.getLogger(__name__)


def predicates(k: int) -> List[PartPredicate]:
    return [PartPredicate.locally_k_irregular(k)] * 2


def _variable_prefix(x: int) -> str:
    return f"x{x}"


def _clause_prefix(number: int) -> str:
    return f"c{number}"


def build_two_in_four_graph(f: Formula, k: int) -> Graph:
    """
    An A gadget with γ(x) main vertices for every variable occurring γ(x) > 0
    times and a B gadget per clause; the t-th occurrence of x joins its
    t-th main vertex to the clause vertex

    Returns:
        Graph with degree set {1, 2, k+1, 2k+2}
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    b = GadgetBuilder()
    occurrences = f.occurrences()
    for x, clauses in enumerate(occurrences):
        if clauses:
            add_gadget_a(b, _variable_prefix(x), len(clauses), k)
    centres = [add_gadget_b(b, _clause_prefix(n), k) for n in range(len(f.clauses))]
    for x, clauses in enumerate(occurrences):
        for t, number in enumerate(clauses, start=1):
            b.edge(scoped(_variable_prefix(x), main_vertex(t)), centres[number])
    g = b.build()
    logger.debug("two-in-four graph (k=%d): %d vertices, %d edges", k, g.vertex_count, g.edge_count)
    return g


def two_in_four_k(f: Formula, g: Graph) -> int:
    """Degree gap recovered from the degree of a hub of the first A gadget"""
    x = next(x for x, clauses in enumerate(f.occurrences()) if clauses)
    return g.degree(g.vertex_named(scoped(_variable_prefix(x), "v1"))) - 1


def _edges_at(g: Graph, name: str) -> List[int]:
    return list(g.incidence[g.vertex_named(name)])


def two_in_four_decomposition(f: Formula, a: Assignment, g: Graph) -> EdgePartition:
    """
    Variable x uses side X = 0 when true, 1 when false: edges at every v_i
    go to X, edges at every u_i and its clause edges to 1 - X. In each D
    copy, edges at p2 and c-p5 go to part 0, edges at p4 and c-p1 to part 1.
    """
    k = two_in_four_k(f, g)
    owner: Dict[int, int] = {}

    def place(edges, part):
        for e in edges:
            owner.setdefault(e, part)

    for x, clauses in enumerate(f.occurrences()):
        side = 0 if a[x] else 1
        prefix = _variable_prefix(x)
        for i in range(1, len(clauses) + 1):
            place(_edges_at(g, scoped(prefix, f"v{i}")), side)
            place(_edges_at(g, scoped(prefix, f"u{i}")), 1 - side)
            place(_edges_at(g, scoped(prefix, main_vertex(i))), 1 - side)

    for number in range(len(f.clauses)):
        prefix = _clause_prefix(number)
        for copy in range(1, k):
            d = scoped(prefix, f"d{copy}")
            place(_edges_at(g, scoped(d, "p2")), 0)
            place(_edges_at(g, scoped(d, "p4")), 1)
            place(_edges_at(g, scoped(d, "p5")), 0)
            place(_edges_at(g, scoped(d, "p1")), 1)

    if len(owner) != g.edge_count:
        raise AssertionError(f"{g.edge_count - len(owner)} edges left unplaced")
    partition = EdgePartition.from_assignment([owner[e] for e in range(g.edge_count)], drop_empty=False)
    if not verify_partition(g, partition, predicates(k)):
        raise AssertionError("two-in-four completion is not a split into two locally k-irregular parts")
    return partition


def two_in_four_assignment(f: Formula, g: Graph, partition: EdgePartition) -> Assignment:
    """A variable is true iff its edges v_i w^i_1 lie in part 0; unused variables are false"""
    part_of = partition.part_of()
    values = []
    for x, clauses in enumerate(f.occurrences()):
        if not clauses:
            values.append(False)
            continue
        prefix = _variable_prefix(x)
        e = g.edge_index(g.vertex_named(scoped(prefix, "v1")), g.vertex_named(scoped(prefix, main_vertex(1))))
        values.append(part_of[e] == 0)
    return Assignment(tuple(values))
