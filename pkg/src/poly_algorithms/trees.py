"""
Polynomial decompositions of trees into matchings and locally irregular parts
"""
import itertools
import logging
from collections import deque
from typing import Dict, List, Set, Tuple

from gadget_forge.builder import GadgetBuilder
from gadget_forge.gadgets import BAD_VERTEX, add_spider
from graph_core.errors import ParameterError, PreconditionError
from graph_core.graph import EdgePartition, Graph, components, degree_profile
from predicates.part_predicates import PartPredicate, satisfies, verify_partition

logger = logging.getLogger(__name__)

MATCHING = PartPredicate.matching()
IRREGULAR = PartPredicate.locally_irregular()


def _require_tree(t: Graph) -> None:
    if t.edge_count == 0:
        raise PreconditionError("the tree has no edges")
    if not t.is_tree():
        raise PreconditionError("input is not a tree")


def _bfs_edges(t: Graph, root: int = 0) -> List[Tuple[int, int, int]]:
    """(edge, parent, child) in breadth-first order from ``root``"""
    order = []
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for e in t.incidence[u]:
            v = t.other_end(e, u)
            if v not in seen:
                seen.add(v)
                order.append((e, u, v))
                queue.append(v)
    return order


def _edge_or_irregular(t: Graph, component) -> bool:
    return len(component) == 1 or satisfies(t, component, IRREGULAR)


def is_matching_plus(t: Graph, matching: Set[int], rest: Set[int]) -> bool:
    """Matching part plus a part whose components are single edges or locally irregular"""
    if matching and not satisfies(t, matching, MATCHING):
        return False
    return all(_edge_or_irregular(t, c) for c in components(t, rest))


class _PeelState:
    """Matching R and remainder P while edges are re-attached leaf by leaf"""

    def __init__(self, t: Graph):
        self.t = t
        self.r_edge: Dict[int, int] = {}
        self.p_edges: Set[int] = set()
        self.p_degree = [0] * t.vertex_count

    def add_to_p(self, e: int) -> None:
        self.p_edges.add(e)
        for w in self.t.edges[e]:
            self.p_degree[w] += 1

    def p_component_ok(self, start: int) -> bool:
        """The P-component through ``start`` is a single edge or locally irregular"""
        seen = {start}
        queue = deque([start])
        edges = set()
        while queue:
            a = queue.popleft()
            for e in self.t.incidence[a]:
                if e not in self.p_edges:
                    continue
                edges.add(e)
                c = self.t.other_end(e, a)
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        if len(edges) <= 1:
            return True
        d = self.p_degree
        return all(d[self.t.edges[e][0]] != d[self.t.edges[e][1]] for e in edges)

    def set_r(self, e: int) -> None:
        for w in self.t.edges[e]:
            self.r_edge[w] = e

    def unset_r(self, e: int) -> None:
        for w in self.t.edges[e]:
            self.r_edge.pop(w, None)


def tree_matching_plus(t: Graph) -> EdgePartition:
    """
    Split a tree into a matching and a part whose components are single
    edges or locally irregular

    Edges are attached in breadth-first order, so each new edge uv hangs a
    new leaf v off u:
      - u unmatched: uv joins the matching
      - u matched to its parent: uv joins the remainder
      - u matched to a child x: uv joins the remainder, and ux follows it
        when u's new remainder degree collides with its parent's

    Args:
        t: Tree with at least one edge

    Returns:
        EdgePartition whose first part is the matching; the remainder is the
        second part when nonempty. A single edge comes back as one matching
        part, which is also a valid single-edge remainder component
    """
    _require_tree(t)
    state = _PeelState(t)
    parent_edge: Dict[int, int] = {}

    for e, u, v in _bfs_edges(t):
        parent_edge[v] = e
        matched = state.r_edge.get(u)
        if matched is None:
            state.set_r(e)
        elif matched == parent_edge.get(u):
            state.add_to_p(e)
        else:
            state.add_to_p(e)
            if not state.p_component_ok(u):
                state.unset_r(matched)
                state.add_to_p(matched)
                if not state.p_component_ok(u):
                    raise AssertionError(f"no valid re-attachment for edge {e}")

    matching = set(state.r_edge.values())
    rest = state.p_edges
    if not is_matching_plus(t, matching, rest):
        raise AssertionError("matching-plus split failed its postcondition")
    parts = tuple(frozenset(p) for p in (matching, rest) if p)
    return EdgePartition(parts)


def tree_two_matchings_irregular(t: Graph) -> EdgePartition:
    """
    Two matchings and one locally irregular part, empty parts dropped

    Single-edge components of the remainder form the second matching and
    the irregular components the third part. Parts whose union is locally
    irregular are then merged into the irregular part.

    Returns:
        EdgePartition with the matching parts first and the locally
        irregular part (if any) last
    """
    split = tree_matching_plus(t)
    matching = set(split.parts[0])
    singles: Set[int] = set()
    irregular: Set[int] = set()
    for component in components(t, split.parts[1] if len(split) > 1 else ()):
        (singles if len(component) == 1 else irregular).update(component)

    matchings = [m for m in (matching, singles) if m]
    if irregular:
        for m in list(matchings):
            if satisfies(t, irregular | m, IRREGULAR):
                irregular |= m
                matchings.remove(m)
    elif len(matchings) == 2 and satisfies(t, matchings[0] | matchings[1], IRREGULAR):
        irregular = matchings[0] | matchings[1]
        matchings = []

    parts = [frozenset(m) for m in matchings]
    preds = [MATCHING] * len(parts)
    if irregular:
        parts.append(frozenset(irregular))
        preds.append(IRREGULAR)
    partition = EdgePartition(tuple(parts))
    if not verify_partition(t, partition, preds):
        raise AssertionError("two-matchings-plus-irregular split failed verification")
    return partition


def tree_delta_matchings(t: Graph) -> EdgePartition:
    """
    Proper edge colouring of a tree with Δ colours, one matching per colour

    Returns:
        EdgePartition with exactly Δ(t) matching parts
    """
    _require_tree(t)
    colour: Dict[int, int] = {}
    for e, u, _ in _bfs_edges(t):
        taken = {colour[f] for f in t.incidence[u] if f in colour}
        colour[e] = next(c for c in itertools.count() if c not in taken)

    delta = t.max_degree
    if max(colour.values()) + 1 != delta:
        raise AssertionError("greedy tree colouring did not use exactly Δ colours")
    partition = EdgePartition.from_assignment([colour[e] for e in range(t.edge_count)])
    if not verify_partition(t, partition, [MATCHING] * delta):
        raise AssertionError("tree colouring is not proper")
    return partition


def pendant_tree() -> Tuple[Graph, int]:
    """
    The 3,3,3,1 tree plus its pendant edge from the bad vertex to z

    Returns:
        Tuple of (graph, index of the pendant edge)
    """
    b = GadgetBuilder()
    add_spider(b, "", (3, 3), (3, 1))
    b.edge(BAD_VERTEX, "z")
    g = b.build()
    return g, g.edge_index(g.vertex_named(BAD_VERTEX), g.vertex_named("z"))


def _valid_split(g: Graph, in_matching: Tuple[bool, ...], z: int, pendant: int, k: int) -> bool:
    matching = [e for e, m in enumerate(in_matching) if m]
    irregular = [e for e, m in enumerate(in_matching) if not m]
    if matching and not satisfies(g, matching, MATCHING):
        return False
    degree = degree_profile(g, irregular)
    for e in irregular:
        if e == pendant:
            continue
        a, c = g.edges[e]
        if degree[a] == degree[c]:
            return False
    if in_matching[pendant]:
        return True
    # z has k edges in the whole tree; any irregular degree 1..k is possible
    bad = g.other_end(pendant, z)
    return any(dz != degree[bad] for dz in range(1, k + 1))


def pendant_forced_into_matching(k: int) -> bool:
    """
    Exhaustive check that every (matching, locally irregular) split of the
    3,3,3,1 tree with its pendant edge puts the pendant edge in the matching,
    and that such a split exists

    With k copies sharing z this leaves z with k > 2 matching edges, so the
    full tree has no such split.

    Args:
        k: Degree of z, k > 2

    Returns:
        True when the pendant edge is forced into the matching
    """
    if k <= 2:
        raise ParameterError(f"k must exceed 2, got {k}")
    g, pendant = pendant_tree()
    z = g.vertex_named("z")
    forced = True
    feasible = False
    for labeling in itertools.product((False, True), repeat=g.edge_count):
        if not _valid_split(g, labeling, z, pendant, k):
            continue
        if labeling[pendant]:
            feasible = True
        else:
            forced = False
            logger.debug("pendant edge left out of the matching: %s", labeling)
            break
    return forced and feasible

