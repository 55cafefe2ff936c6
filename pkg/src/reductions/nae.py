"""
Cubic NAE (2,3) formulas to bipartite graphs with degrees α and 2α that
split into two regular parts exactly when the formula is NAE-satisfiable
"""
import logging
from typing import Dict, List

from gadget_forge.builder import GadgetBuilder
from gadget_forge.gadgets import add_gadget_h, add_gadget_i, scoped
from graph_core.errors import PreconditionError
from graph_core.graph import EdgePartition, Graph
from predicates.part_predicates import PartPredicate, verify_partition
from reductions.formula import Assignment, Formula

logger = logging.getLogger(__name__)

PREDICATES = [PartPredicate.regular(), PartPredicate.regular()]


def variable_vertex(x: int, primed: bool = False) -> str:
    return f"var{x}'" if primed else f"var{x}"


def _clause_prefix(number: int) -> str:
    return f"c{number}"


def _block_prefix(x: int) -> str:
    return f"blk{x}"


def build_nae_graph(f: Formula, alpha: int) -> Graph:
    """
    Per variable: vertices x, x' and a K_{α,α} block, x joined to
    x1..x(α-3), x' joined to y1..y(α-3), matching x_i y_i removed; per
    3-clause an H gadget and per 2-clause an I gadget whose hubs join the
    clause variables (unprimed hub) and their primes (primed hub)

    Args:
        f: Cubic NAE (2,3) formula
        alpha: Gadget size, at least 3

    Returns:
        Bipartite graph with degree set {α, 2α}
    """
    if alpha < 3:
        raise PreconditionError(f"alpha must be at least 3, got {alpha}")
    b = GadgetBuilder()
    for x in range(f.variable_count):
        prefix = _block_prefix(x)
        xs = b.vertices(scoped(prefix, f"x{i}") for i in range(1, alpha + 1))
        ys = b.vertices(scoped(prefix, f"y{i}") for i in range(1, alpha + 1))
        b.complete_bipartite(xs, ys)
        for i in range(alpha - 3):
            b.edge(variable_vertex(x), xs[i])
            b.edge(variable_vertex(x, True), ys[i])
            b.remove_edge(xs[i], ys[i])

    for number, clause in enumerate(f.clauses):
        prefix = _clause_prefix(number)
        if len(clause) == 3:
            add_gadget_h(b, prefix, alpha)
            hub, hub_prime = scoped(prefix, "a"), scoped(prefix, "a'")
        else:
            add_gadget_i(b, prefix, alpha)
            hub, hub_prime = scoped(prefix, "b"), scoped(prefix, "b'")
        for x in clause:
            b.edge(hub, variable_vertex(x))
            b.edge(hub_prime, variable_vertex(x, True))

    g = b.build()
    logger.debug("nae graph (alpha=%d): %d vertices, %d edges", alpha, g.vertex_count, g.edge_count)
    return g


def nae_alpha(g: Graph) -> int:
    """Gadget size recovered from the degree of a variable vertex"""
    return g.degree(g.vertex_named(variable_vertex(0)))


def _edges_at(g: Graph, name: str) -> List[int]:
    return list(g.incidence[g.vertex_named(name)])


def nae_decomposition(f: Formula, a: Assignment, g: Graph) -> EdgePartition:
    """
    Variable x owns part 0 when true and part 1 when false: its block and
    every edge at x and x' go there. A clause gadget's first K_{α,α} goes
    to the part of its lone (or second) variable and the other copy to the
    remaining part.
    """
    alpha = nae_alpha(g)
    owner: Dict[int, int] = {}

    def place(edges, part):
        for e in edges:
            owner.setdefault(e, part)

    def part_of(x: int) -> int:
        return 0 if a[x] else 1

    for x in range(f.variable_count):
        place(_edges_at(g, variable_vertex(x)), part_of(x))
        place(_edges_at(g, variable_vertex(x, True)), part_of(x))
        for i in range(1, alpha + 1):
            place(_edges_at(g, scoped(_block_prefix(x), f"y{i}")), part_of(x))

    for number, clause in enumerate(f.clauses):
        prefix = _clause_prefix(number)
        values = [a[x] for x in clause]
        if len(clause) == 3:
            minority = next(v for v in values if values.count(v) == 1)
            first = 0 if minority else 1
        else:
            first = part_of(clause[1])
        for i in range(1, alpha + 1):
            place(_edges_at(g, scoped(prefix, f"y{i}")), first)
            place(_edges_at(g, scoped(prefix, f"y'{i}")), 1 - first)
        for i in range(1, alpha):
            place(_edges_at(g, scoped(prefix, f"x{i}")), first)
        for i in range(1, alpha + 1):
            name = scoped(prefix, f"x'{i}")
            if g.vertex_named(name) != g.vertex_named(scoped(prefix, f"x{alpha}")):
                place(_edges_at(g, name), 1 - first)

    if len(owner) != g.edge_count:
        raise AssertionError(f"{g.edge_count - len(owner)} edges left unplaced")
    partition = EdgePartition.from_assignment([owner[e] for e in range(g.edge_count)], drop_empty=False)
    if not verify_partition(g, partition, PREDICATES):
        raise AssertionError("nae completion is not a split into two regular parts")
    return partition


def nae_assignment(f: Formula, g: Graph, partition: EdgePartition) -> Assignment:
    """A variable is true iff the edges at its vertex lie in part 0"""
    part_of = partition.part_of()
    values = []
    for x in range(f.variable_count):
        edges = _edges_at(g, variable_vertex(x))
        values.append(part_of[edges[0]] == 0)
    return Assignment(tuple(values))
