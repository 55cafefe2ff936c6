"""
Two-part locally k-irregular decompositions of graphs with Δ = k + 1
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

import networkx as nx

from graph_core.errors import ParameterError, PreconditionError
from graph_core.graph import Edge, EdgePartition, Graph
from predicates.part_predicates import PartPredicate, verify_partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KIrrConditionsReport:
    """
    Structural conditions for graphs with Δ = k + 1

    condition_a: no edge joins two vertices of degree < k+1
    condition_b: no edge joins two vertices of degree k+1
    condition_c: every neighbour of a degree-(k+1) vertex has degree <= 2
    """

    condition_a: bool
    condition_b: bool
    condition_c: bool
    violating_edge: Optional[Edge] = None

    @property
    def all_hold(self) -> bool:
        return self.condition_a and self.condition_b and self.condition_c


def _check_degree(g: Graph, k: int) -> None:
    if k < 1:
        raise ParameterError(f"k must be positive, got {k}")
    if g.max_degree != k + 1:
        raise PreconditionError(f"maximum degree is {g.max_degree}, expected k+1 = {k + 1}")


def k_irregular_conditions(g: Graph, k: int) -> KIrrConditionsReport:
    """
    Evaluate conditions A, B and C, reporting the first violating edge

    Args:
        g: Graph with Δ(g) = k + 1
        k: Required degree gap

    Returns:
        KIrrConditionsReport
    """
    _check_degree(g, k)
    hub = k + 1
    flags = {"a": True, "b": True, "c": True}
    witness = None
    for u, v in g.edges:
        du, dv = g.degree(u), g.degree(v)
        broken = []
        if du < hub and dv < hub:
            broken.append("a")
        if du == hub and dv == hub:
            broken.append("b")
        if (du == hub and dv > 2) or (dv == hub and du > 2):
            broken.append("c")
        for name in broken:
            flags[name] = False
        if broken and witness is None:
            witness = (u, v)
    return KIrrConditionsReport(flags["a"], flags["b"], flags["c"], witness)


def hub_graph(g: Graph, k: int) -> nx.Graph:
    """Degree-(k+1) vertices, adjacent when they share a degree-2 neighbour"""
    hubs = [v for v in range(g.vertex_count) if g.degree(v) == k + 1]
    star = nx.Graph()
    star.add_nodes_from(hubs)
    for z in range(g.vertex_count):
        if g.degree(z) != 2:
            continue
        a, b = g.neighbors(z)
        if g.degree(a) == k + 1 and g.degree(b) == k + 1:
            star.add_edge(a, b)
    return star


def k_irregular_two_parts(g: Graph, k: int) -> Optional[EdgePartition]:
    """
    Split g into two locally k-irregular parts when conditions A, B, C hold

    Each hub keeps all of its edges in one part, and hubs sharing a
    degree-2 neighbour must differ, so a split exists iff the hub graph is
    bipartite (and has at least two hubs).

    Args:
        g: Connected graph with Δ(g) = k + 1
        k: Required degree gap

    Returns:
        Two-part EdgePartition or None
    """
    if g.edge_count == 0:
        raise PreconditionError("the graph has no edges")
    if not g.is_connected():
        raise PreconditionError("the graph must be connected")
    report = k_irregular_conditions(g, k)
    if not report.all_hold:
        logger.debug("conditions fail at edge %s: %s", report.violating_edge, report)
        return None

    star = hub_graph(g, k)
    if star.number_of_nodes() < 2 or not nx.is_bipartite(star):
        return None

    side = {}
    for component in nx.connected_components(star):
        colouring = nx.bipartite.color(star.subgraph(component))
        flip = colouring[min(component)]
        side.update({v: c ^ flip for v, c in colouring.items()})
    if len(set(side.values())) < 2:
        # every component coloured alike; move the last one to the other part
        last = max(nx.connected_components(star), key=min)
        for v in last:
            side[v] ^= 1
        if len(set(side.values())) < 2:
            return None

    assignment: List[int] = []
    for u, v in g.edges:
        hubs = [w for w in (u, v) if w in side]
        if len(hubs) != 1:
            raise AssertionError(f"edge ({u}, {v}) does not have exactly one hub endpoint")
        assignment.append(side[hubs[0]])

    partition = EdgePartition.from_assignment(assignment, drop_empty=False)
    if not verify_partition(g, partition, [PartPredicate.locally_k_irregular(k)] * 2):
        raise AssertionError("hub colouring does not give locally k-irregular parts")
    return partition
