"""
Semi-colourings: edge labels by one or two colours from 1..Δ, and the
locally regular decomposition they induce
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

from exact_solver.search import SearchBudget
from graph_core.errors import PreconditionError
from graph_core.graph import EdgePartition, Graph, components, degree_profile
from predicates.part_predicates import PartPredicate, verify_partition

logger = logging.getLogger(__name__)

ColourSet = FrozenSet[int]


@dataclass(frozen=True)
class SemiColoring:
    """
    ``assignment[e]`` is the colour set of edge e

    At every vertex each colour collects weight 0 or 1 (a singleton label
    weighs 1, a pair label 1/2 per colour) and each pair label occurs on 0
    or 2 incident edges.
    """

    assignment: Tuple[ColourSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(frozenset(c) for c in self.assignment))

    def __getitem__(self, edge: int) -> ColourSet:
        return self.assignment[edge]


def semi_coloring_problems(g: Graph, sc: SemiColoring) -> List[str]:
    """Every violated semi-colouring condition, as messages"""
    if len(sc.assignment) != g.edge_count:
        return [f"{len(sc.assignment)} labels for {g.edge_count} edges"]
    delta = g.max_degree
    issues = []
    for e, colours in enumerate(sc.assignment):
        if len(colours) not in (1, 2) or not all(1 <= c <= delta for c in colours):
            issues.append(f"edge {e} has label {sorted(colours)} outside 1..{delta} or of bad size")
    if issues:
        return issues

    for v in range(g.vertex_count):
        halves: Counter = Counter()
        pairs: Counter = Counter()
        for e in g.incidence[v]:
            colours = sc.assignment[e]
            for c in colours:
                halves[c] += 2 // len(colours)
            if len(colours) == 2:
                pairs[tuple(sorted(colours))] += 1
        issues += [f"vertex {v} colour {c} has weight {h / 2}" for c, h in sorted(halves.items()) if h not in (0, 2)]
        issues += [f"vertex {v} pair {p} appears {n} times" for p, n in sorted(pairs.items()) if n not in (0, 2)]
    return issues


def check_semi_coloring(g: Graph, sc: SemiColoring) -> bool:
    return not semi_coloring_problems(g, sc)


class _SemiColoringSearch:
    """Backtracking over edge labels with running weight and pair counts"""

    def __init__(self, g: Graph, max_nodes: int):
        self.g = g
        self.delta = g.max_degree
        self.max_nodes = max_nodes
        self.nodes = 0
        self.labels: List[ColourSet] = [frozenset((c,)) for c in range(1, self.delta + 1)]
        self.labels += [
            frozenset((i, j)) for i in range(1, self.delta + 1) for j in range(i + 1, self.delta + 1)
        ]
        degrees = [int(d) for d in g.degrees]
        self.order = sorted(
            range(g.edge_count),
            key=lambda e: (-max(degrees[g.edges[e][0]], degrees[g.edges[e][1]]), e),
        )
        self.remaining = degrees
        self.halves = [[0] * (self.delta + 1) for _ in range(g.vertex_count)]
        self.pairs = [Counter() for _ in range(g.vertex_count)]
        self.assignment: List[Optional[ColourSet]] = [None] * g.edge_count
        self.top = [0]

    def candidates(self) -> List[ColourSet]:
        """Labels up to relabelling of colours not used yet"""
        m = self.top[-1]
        fresh_pair = frozenset((m + 1, m + 2))
        return [c for c in self.labels if max(c) <= m + 1 or c == fresh_pair]

    def _apply(self, e: int, colours: ColourSet, sign: int) -> None:
        weight = 2 // len(colours)
        for w in self.g.edges[e]:
            for c in colours:
                self.halves[w][c] += sign * weight
            if len(colours) == 2:
                self.pairs[w][tuple(sorted(colours))] += sign
            self.remaining[w] -= sign

    def _vertex_ok(self, w: int) -> bool:
        h = self.halves[w]
        if any(x > 2 for x in h):
            return False
        open_pairs = []
        for pair, n in self.pairs[w].items():
            if n > 2:
                return False
            if n == 1:
                open_pairs.append(pair)
        rest = self.remaining[w]
        if rest == 0:
            return not open_pairs and all(x != 1 for x in h)
        if len(open_pairs) > rest:
            return False
        if any(h[i] != 1 or h[j] != 1 for i, j in open_pairs):
            return False
        unfinished = sum(1 for x in h if x == 1)
        return (unfinished + 1) // 2 <= rest

    def push(self, e: int, colours: ColourSet) -> bool:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Exhausted()
        self.assignment[e] = colours
        self._apply(e, colours, 1)
        self.top.append(max(self.top[-1], max(colours)))
        return all(self._vertex_ok(w) for w in self.g.edges[e])

    def pop(self, e: int) -> None:
        self._apply(e, self.assignment[e], -1)
        self.assignment[e] = None
        self.top.pop()

    def run(self, position: int = 0) -> bool:
        if position == len(self.order):
            return True
        e = self.order[position]
        for colours in self.candidates():
            ok = self.push(e, colours)
            if ok and self.run(position + 1):
                return True
            self.pop(e)
        return False


class _Exhausted(Exception):
    pass


def find_semi_coloring(g: Graph, budget: Optional[SearchBudget] = None) -> Optional[SemiColoring]:
    """
    Search for a semi-colouring of g with colours 1..Δ(g)

    Every graph has one, so None only reports an exhausted budget.

    Args:
        g: Graph with at least one edge
        budget: Node cap; the search is always sequential

    Returns:
        SemiColoring or None
    """
    if g.edge_count == 0:
        raise PreconditionError("the graph has no edges")
    budget = budget or SearchBudget()
    search = _SemiColoringSearch(g, budget.max_nodes)
    try:
        found = search.run()
    except _Exhausted:
        logger.warning("semi-colouring search exhausted after %d nodes", search.nodes)
        return None
    if not found:
        raise AssertionError("semi-colouring search failed without exhausting its budget")

    sc = SemiColoring(tuple(search.assignment))
    if not check_semi_coloring(g, sc):
        raise AssertionError("search produced an invalid semi-colouring")
    logger.debug("semi-colouring found after %d nodes", search.nodes)
    return sc


def _edge_or_cycle(g: Graph, component) -> bool:
    if len(component) == 1:
        return True
    return all(d == 2 for d in degree_profile(g, component).values())


def extract_locally_regular_parts(g: Graph, sc: SemiColoring) -> EdgePartition:
    """
    Part i holds the edges labelled {i} and {i, j} with i < j

    Args:
        g: Graph
        sc: Valid semi-colouring of g

    Returns:
        At most Δ(g) nonempty locally regular parts whose components are
        single edges or cycles
    """
    issues = semi_coloring_problems(g, sc)
    if issues:
        raise PreconditionError("invalid semi-colouring: " + "; ".join(issues[:5]))

    parts = [set() for _ in range(g.max_degree + 1)]
    for e, colours in enumerate(sc.assignment):
        parts[min(colours)].add(e)
    partition = EdgePartition(tuple(frozenset(p) for p in parts if p))

    if not verify_partition(g, partition, [PartPredicate.locally_regular()]):
        raise AssertionError("semi-colouring parts are not locally regular")
    for part in partition:
        if not all(_edge_or_cycle(g, c) for c in components(g, part)):
            raise AssertionError("semi-colouring part has a component that is neither an edge nor a cycle")
    return partition
