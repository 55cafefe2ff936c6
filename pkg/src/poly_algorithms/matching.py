"""
Maximum matching, perfect matching on vertex subsets, and 2-factors
"""
import logging
from typing import Iterable, Optional

import networkx as nx

from graph_core.graph import EdgeSubset, Graph

logger = logging.getLogger(__name__)


def max_matching(g: Graph) -> EdgeSubset:
    """
    Maximum cardinality matching (Edmonds blossom algorithm)

    Args:
        g: Any simple graph

    Returns:
        Edge indices of a maximum matching
    """
    nxg = g.to_networkx()
    mate = nx.max_weight_matching(nxg, maxcardinality=True)
    matching = frozenset(g.edge_index(u, v) for u, v in mate)
    logger.debug("maximum matching of size %d on %d edges", len(matching), g.edge_count)
    return matching


def perfect_matching(g: Graph, vertices: Optional[Iterable[int]] = None) -> Optional[EdgeSubset]:
    """
    Perfect matching of the subgraph induced on ``vertices``

    Args:
        g: Host graph
        vertices: Vertex set to saturate (all vertices when omitted)

    Returns:
        Edge indices of g forming the matching, or None when none exists
    """
    chosen = sorted(set(range(g.vertex_count) if vertices is None else vertices))
    if len(chosen) % 2:
        return None
    sub, edge_map = g.induced_subgraph(chosen)
    matching = max_matching(sub)
    if 2 * len(matching) != len(chosen):
        return None
    return frozenset(edge_map[e] for e in matching)


def _two_factor_gadget(g: Graph) -> nx.Graph:
    """
    Tutte gadget: perfect matchings correspond to 2-factors of g

    Vertex v becomes one outer node per incident edge plus d(v) - 2 inner
    nodes joined to all of its outer nodes; each edge uv joins the outer
    node of u for that edge to the outer node of v for that edge.
    """
    gadget = nx.Graph()
    for v in range(g.vertex_count):
        outer = [("outer", v, e) for e in g.incidence[v]]
        gadget.add_nodes_from(outer)
        for slot in range(g.degree(v) - 2):
            inner = ("inner", v, slot)
            for node in outer:
                gadget.add_edge(inner, node)
    for e, (u, v) in enumerate(g.edges):
        gadget.add_edge(("outer", u, e), ("outer", v, e), edge=e)
    return gadget


def two_factor(g: Graph) -> Optional[EdgeSubset]:
    """
    Spanning subgraph in which every vertex of g has degree exactly 2

    Args:
        g: Any simple graph

    Returns:
        Edge indices of a 2-factor, or None when g has none
    """
    if g.vertex_count == 0:
        return frozenset()
    if int(g.degrees.min()) < 2:
        return None

    gadget = _two_factor_gadget(g)
    mate = nx.max_weight_matching(gadget, maxcardinality=True)
    if 2 * len(mate) != gadget.number_of_nodes():
        logger.debug("2-factor gadget has no perfect matching")
        return None

    factor = set()
    for a, b in mate:
        data = gadget.get_edge_data(a, b)
        if data and "edge" in data:
            factor.add(data["edge"])

    degree = [0] * g.vertex_count
    for e in factor:
        u, v = g.edges[e]
        degree[u] += 1
        degree[v] += 1
    if any(d != 2 for d in degree):
        raise AssertionError("2-factor gadget produced a subgraph that is not 2-regular")
    return frozenset(factor)
