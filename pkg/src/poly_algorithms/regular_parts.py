"""
Deciding whether a connected graph with maximum degree at most five splits
into two regular parts, and building the split when it exists
"""
import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from graph_core.errors import PreconditionError
from graph_core.graph import EdgePartition, Graph
from poly_algorithms.matching import perfect_matching, two_factor
from predicates.part_predicates import PartPredicate, verify_partition

logger = logging.getLogger(__name__)

REGULAR_PAIR = [PartPredicate.regular(), PartPredicate.regular()]


def _finish(g: Graph, first: frozenset) -> Optional[EdgePartition]:
    rest = g.all_edges - first
    if not first or not rest:
        return None
    partition = EdgePartition((frozenset(first), frozenset(rest)))
    if not verify_partition(g, partition, REGULAR_PAIR):
        raise AssertionError("regular split failed verification")
    return partition


def _alternate_path_or_cycle(g: Graph) -> Optional[EdgePartition]:
    """(1,1): a path or an even cycle coloured alternately"""
    ends = [v for v in range(g.vertex_count) if g.degree(v) == 1]
    start = ends[0] if ends else 0
    colour: Dict[int, int] = {}
    previous_edge = None
    current = start
    step = 0
    while True:
        nxt = [e for e in g.incidence[current] if e != previous_edge and e not in colour]
        if not nxt:
            break
        edge = nxt[0]
        colour[edge] = step % 2
        step += 1
        previous_edge = edge
        current = g.other_end(edge, current)
    if len(colour) != g.edge_count:
        return None
    first = frozenset(e for e, c in colour.items() if c == 0)
    if not ends and g.edge_count % 2:
        return None
    return _finish(g, first)


def _euler_two_factorization(g: Graph) -> Optional[EdgePartition]:
    """
    (2,2) for degree sets inside {2,4}: contract maximal paths through
    degree-2 vertices into single (multi)edges between degree-4 vertices,
    walk an Euler circuit of the 4-regular contraction and colour its
    edges alternately
    """
    hubs = [v for v in range(g.vertex_count) if g.degree(v) == 4]
    if not hubs:
        return None

    contracted = nx.MultiGraph()
    contracted.add_nodes_from(hubs)
    used = set()
    for hub in hubs:
        for first_edge in g.incidence[hub]:
            if first_edge in used:
                continue
            chain = [first_edge]
            used.add(first_edge)
            current = g.other_end(first_edge, hub)
            previous = first_edge
            while g.degree(current) == 2:
                nxt = next(e for e in g.incidence[current] if e != previous)
                chain.append(nxt)
                used.add(nxt)
                previous = nxt
                current = g.other_end(nxt, current)
            contracted.add_edge(hub, current, chain=tuple(chain))

    if not nx.is_connected(contracted):
        return None
    circuit = list(nx.eulerian_circuit(contracted, keys=True))
    if len(circuit) % 2:
        raise AssertionError("Euler circuit of a 4-regular graph has odd length")

    first = set()
    for position, (a, b, key) in enumerate(circuit):
        if position % 2 == 0:
            first.update(contracted.edges[a, b, key]["chain"])
    return _finish(g, frozenset(first))


def _matching_split(g: Graph, delta: int) -> Optional[EdgePartition]:
    """(1, delta - 1): a perfect matching on the degree-1 and degree-delta vertices"""
    extremes = [v for v in range(g.vertex_count) if g.degree(v) in (1, delta)]
    matching = perfect_matching(g, extremes)
    if matching is None:
        return None
    return _finish(g, matching)


def _factor_split(g: Graph) -> Optional[EdgePartition]:
    """(2,3): a 2-factor of the subgraph induced on the degree-2 and degree-5 vertices"""
    chosen = [v for v in range(g.vertex_count) if g.degree(v) in (2, 5)]
    sub, edge_map = g.induced_subgraph(chosen)
    factor = two_factor(sub)
    if factor is None:
        return None
    return _finish(g, frozenset(edge_map[e] for e in factor))


def degree_splits(delta: int) -> List[Tuple[int, int]]:
    """Pairs r1 <= r2 with r1 + r2 = delta"""
    return [(r1, delta - r1) for r1 in range(1, delta // 2 + 1)]


def two_regular_parts_low_degree(g: Graph) -> Optional[EdgePartition]:
    """
    Split a connected graph with maximum degree at most 5 into two regular parts

    In a split into an r1-regular and an r2-regular part every vertex has
    degree r1, r2 or r1 + r2, and connectivity forces r1 + r2 = Δ. Each
    (r1, r2) pair is then decided by a matching, 2-factor or Euler argument.

    Args:
        g: Connected graph, 1 <= |E|, Δ <= 5

    Returns:
        Two-part EdgePartition with both parts regular, or None
    """
    if g.edge_count == 0:
        raise PreconditionError("the graph has no edges")
    if not g.is_connected():
        raise PreconditionError("the graph must be connected")
    delta = g.max_degree
    if delta > 5:
        raise PreconditionError(f"maximum degree {delta} exceeds 5")

    degree_set = {d for d in g.degree_set() if d > 0}
    for r1, r2 in degree_splits(delta):
        if not degree_set <= {r1, r2, delta}:
            continue
        if (r1, r2) == (1, 1):
            result = _alternate_path_or_cycle(g)
        elif r1 == 1:
            result = _matching_split(g, delta)
        elif (r1, r2) == (2, 2):
            result = _euler_two_factorization(g)
        else:
            result = _factor_split(g)
        logger.debug("split (%d,%d) on degree set %s: %s", r1, r2, sorted(degree_set),
                     "found" if result else "none")
        if result is not None:
            return result
    return None
