"""
Cubic one-in-three formulas to graphs that split into a regular and a
locally irregular part exactly when the formula is satisfiable
"""
import logging
from typing import Set

from exact_solver.search import decide
from gadget_forge.builder import GadgetBuilder
from gadget_forge.gadgets import add_spider
from graph_core.graph import EdgePartition, Graph
from predicates.part_predicates import PartPredicate, verify_partition
from reductions.formula import Assignment, Formula

logger = logging.getLogger(__name__)

PREDICATES = [PartPredicate.regular(), PartPredicate.locally_irregular()]
TREE_PREFIX = "tree"
RING = ("x", "x'", "x''", "x'''")
Z_RING = ("z", "z'", "z''", "z'''")


def block(variable: int, i: int, role: str) -> str:
    """Vertex ``role`` of the block for (variable, i)"""
    return f"b{variable}.{i}.{role}"


def clause_vertex(i: int) -> str:
    return f"c{i}"


def build_one_in_three_graph(f: Formula) -> Graph:
    """
    For each variable and each i in Z_m: 4-cycles x x' x'' x''' and
    z z' z'' z''', a vertex s joined to x'' and z'', and a vertex r joined
    to z''' and to x''' of block i+1; clause edges c_i x_i; a dummy pendant
    on every vertex of degree 2; plus the 4,4,2,2 tree

    Args:
        f: Cubic one-in-three formula (m clauses, m variables)

    Returns:
        Graph with provenance labels
    """
    m = len(f.clauses)
    b = GadgetBuilder()
    for x in range(f.variable_count):
        for i in range(m):
            b.cycle([block(x, i, r) for r in RING])
            b.cycle([block(x, i, r) for r in Z_RING])
            b.star(block(x, i, "s"), [block(x, i, "x''"), block(x, i, "z''")])
            b.star(block(x, i, "r"), [block(x, i, "z'''"), block(x, (i + 1) % m, "x'''")])
    for i, clause in enumerate(f.clauses):
        for x in clause:
            b.edge(clause_vertex(i), block(x, i, "x"))

    draft = b.build()
    for v in range(draft.vertex_count):
        if draft.degree(v) == 2:
            name = draft.label(v)
            b.edge(name, f"{name}~dummy")

    add_spider(b, TREE_PREFIX, (4, 4), (2, 2))
    g = b.build()
    logger.debug("one-in-three graph: %d vertices, %d edges", g.vertex_count, g.edge_count)
    return g


def _outside_edge(g: Graph, variable: int, i: int, role: str) -> int:
    """The edge at ``role`` leaving its 4-cycle"""
    ring = RING if role in RING else Z_RING
    v = g.vertex_named(block(variable, i, role))
    cycle = {g.vertex_named(block(variable, i, r)) for r in ring}
    (edge,) = [e for e in g.incidence[v] if g.other_end(e, v) not in cycle]
    return edge


def one_in_three_decomposition(f: Formula, a: Assignment, g: Graph) -> EdgePartition:
    """
    Regular (1-regular) part: per block, x y, x'' y'', z' w', z''' w''' for
    a true variable and x' y', x''' y''', z w, z'' w'' for a false one,
    where y and w denote the neighbour outside the 4-cycle; the tree part
    comes from a solver run on the tree alone
    """
    m = len(f.clauses)
    matched: Set[int] = set()
    for x in range(f.variable_count):
        roles = ("x", "x''", "z'", "z'''") if a[x] else ("x'", "x'''", "z", "z''")
        for i in range(m):
            matched.update(_outside_edge(g, x, i, role) for role in roles)

    tree_vertices = [v for v in range(g.vertex_count) if g.label(v).startswith(TREE_PREFIX + ".")]
    tree, edge_map = g.induced_subgraph(tree_vertices)
    outcome = decide(tree, [PartPredicate.matching(), PartPredicate.locally_irregular()])
    if not outcome.feasible:
        raise AssertionError("the 4,4,2,2 tree has no matching plus locally irregular split")
    matched.update(edge_map[e] for e in outcome.partition.parts[0])

    rest = g.all_edges - matched
    partition = EdgePartition((frozenset(matched), rest))
    if not verify_partition(g, partition, PREDICATES):
        raise AssertionError("one-in-three completion is not a regular plus locally irregular split")
    return partition


def one_in_three_assignment(f: Formula, g: Graph, partition: EdgePartition) -> Assignment:
    """A variable is true iff one of its clause edges lies in the regular part"""
    regular_first = verify_partition(g, partition, PREDICATES)
    regular = partition.parts[0] if regular_first else partition.parts[1]
    values = []
    for x in range(f.variable_count):
        clause_edges = [
            g.edge_index(g.vertex_named(clause_vertex(i)), g.vertex_named(block(x, i, "x")))
            for i, clause in enumerate(f.clauses) if x in clause
        ]
        values.append(any(e in regular for e in clause_edges))
    return Assignment(tuple(values))
