"""
Branch-and-bound search assigning every edge to one of t parts

Edges are taken in a fixed order (descending larger endpoint degree, ties
by index). A vertex's part degrees are final once all of its edges are
placed; partial assignments are cut as soon as final degrees contradict a
part's predicate.
"""
import logging
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from tqdm import tqdm

from graph_core.errors import ParameterError, PreconditionError
from graph_core.graph import EdgePartition, Graph
from predicates.part_predicates import PartPredicate, PredicateKind, verify_partition

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchBudget:
    """Node cap for one search; ``jobs`` > 1 only takes effect when not deterministic"""

    max_nodes: int = 2_000_000
    deterministic: bool = True
    jobs: int = 1

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ParameterError("max_nodes must be at least 1")
        if self.jobs < 1:
            raise ParameterError("jobs must be at least 1")


class SolveStatus(Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class SolveOutcome:
    status: SolveStatus
    partition: Optional[EdgePartition] = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status is SolveStatus.FEASIBLE


@dataclass(frozen=True)
class MinPartsResult:
    """Smallest feasible part count, or the reason none was found"""

    parts: Optional[int]
    witness: Optional[EdgePartition]
    max_t: int
    exhausted_at: Optional[int] = None
    outcomes: Tuple[SolveOutcome, ...] = field(default=(), compare=False)

    @property
    def status(self) -> SolveStatus:
        if self.parts is not None:
            return SolveStatus.FEASIBLE
        if self.exhausted_at is not None:
            return SolveStatus.BUDGET_EXHAUSTED
        return SolveStatus.INFEASIBLE


class _Exhausted(Exception):
    pass


@dataclass
class _Undo:
    edge: int
    part: int
    finalized: List[int]
    final_entries: List[Tuple[int, int]]
    equal_edges: List[int]
    opened_part: bool


class EdgePartitionSearch:
    """Depth-first search state for one (graph, predicates) pair"""

    def __init__(self, g: Graph, preds: Sequence[PartPredicate], max_nodes: int):
        self.g = g
        self.preds = list(preds)
        self.t = len(self.preds)
        self.max_nodes = max_nodes
        self.nodes = 0

        degrees = [int(d) for d in g.degrees]
        self.order = sorted(
            range(g.edge_count),
            key=lambda e: (-max(degrees[g.edges[e][0]], degrees[g.edges[e][1]]), e),
        )
        self.symmetric = all(p == self.preds[0] for p in self.preds)

        self.assignment = [-1] * g.edge_count
        self.part_degree = [[0] * g.vertex_count for _ in range(self.t)]
        self.remaining = degrees
        self.part_size = [0] * self.t
        self.empty_parts = self.t
        self.final_degrees = [Counter() for _ in range(self.t)]
        self.equal_final_edges = [0] * self.t
        self.undo_stack: List[_Undo] = []
        self.highest_used = [-1]

    # Mutation

    def push(self, edge: int, part: int) -> bool:
        """Place ``edge`` in ``part``; return False when the result must be pruned"""
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise _Exhausted()

        u, v = self.g.edges[edge]
        self.assignment[edge] = part
        self.part_size[part] += 1
        opened = self.part_size[part] == 1
        if opened:
            self.empty_parts -= 1
        degree = self.part_degree[part]
        degree[u] += 1
        degree[v] += 1
        self.remaining[u] -= 1
        self.remaining[v] -= 1

        finalized = [w for w in ((u, v) if u != v else (u,)) if self.remaining[w] == 0]
        final_entries = []
        equal_edges = []
        for w in finalized:
            for j in range(self.t):
                d = self.part_degree[j][w]
                if d:
                    self.final_degrees[j][d] += 1
                    final_entries.append((j, d))
        counted = set()
        for w in finalized:
            for f in self.g.incidence[w]:
                x = self.g.other_end(f, w)
                if f in counted or self.remaining[x] != 0:
                    continue
                counted.add(f)
                j = self.assignment[f]
                if self.part_degree[j][w] == self.part_degree[j][x]:
                    self.equal_final_edges[j] += 1
                    equal_edges.append(j)

        self.highest_used.append(max(self.highest_used[-1], part))
        self.undo_stack.append(_Undo(edge, part, finalized, final_entries, equal_edges, opened))
        return self._consistent(edge, part, finalized)

    def pop(self) -> None:
        record = self.undo_stack.pop()
        self.highest_used.pop()
        for j in record.equal_edges:
            self.equal_final_edges[j] -= 1
        for j, d in record.final_entries:
            counter = self.final_degrees[j]
            counter[d] -= 1
            if counter[d] == 0:
                del counter[d]

        u, v = self.g.edges[record.edge]
        part = record.part
        self.remaining[u] += 1
        self.remaining[v] += 1
        self.part_degree[part][u] -= 1
        self.part_degree[part][v] -= 1
        self.part_size[part] -= 1
        if record.opened_part:
            self.empty_parts += 1
        self.assignment[record.edge] = -1

    # Pruning

    def _consistent(self, edge: int, part: int, finalized: List[int]) -> bool:
        unassigned = self.g.edge_count - len(self.undo_stack)
        if unassigned < self.empty_parts:
            return False

        kind = self.preds[part].kind
        if kind is PredicateKind.MATCHING:
            u, v = self.g.edges[edge]
            if self.part_degree[part][u] > 1 or self.part_degree[part][v] > 1:
                return False
        elif kind is PredicateKind.REGULAR and self.final_degrees[part]:
            if len(self.final_degrees[part]) > 1:
                return False
            target = next(iter(self.final_degrees[part]))
            for w in self.g.edges[edge]:
                if self.part_degree[part][w] > target:
                    return False

        for w in finalized:
            for j in range(self.t):
                if self.part_degree[j][w] and not self._final_vertex_ok(w, j):
                    return False
        return True

    def _final_vertex_ok(self, w: int, j: int) -> bool:
        pred = self.preds[j]
        kind = pred.kind
        d = self.part_degree[j][w]
        degree = self.part_degree[j]

        if kind is PredicateKind.MATCHING:
            return d == 1

        if kind is PredicateKind.REGULAR:
            if len(self.final_degrees[j]) > 1:
                return False
            for x in range(self.g.vertex_count):
                dx = degree[x]
                if dx and (dx > d or dx + self.remaining[x] < d):
                    return False
            return True

        if kind is PredicateKind.REGULAR_OR_LOCALLY_IRREGULAR:
            return not (len(self.final_degrees[j]) > 1 and self.equal_final_edges[j] > 0)

        if kind is PredicateKind.COMPONENTWISE_REGULAR_OR_LOCALLY_IRREGULAR:
            return self._closed_component_ok(w, j)

        for f in self.g.incidence[w]:
            if self.assignment[f] != j:
                continue
            x = self.g.other_end(f, w)
            low = degree[x]
            high = low + self.remaining[x]
            if kind is PredicateKind.LOCALLY_REGULAR:
                if not low <= d <= high:
                    return False
            else:
                gap = pred.min_difference
                if not (low <= d - gap or high >= d + gap):
                    return False
        return True

    def _closed_component_ok(self, w: int, j: int) -> bool:
        """Check the part-j component of ``w`` once all of its vertices are final"""
        seen = {w}
        queue = deque([w])
        component_edges = set()
        while queue:
            a = queue.popleft()
            if self.remaining[a]:
                return True
            for f in self.g.incidence[a]:
                if self.assignment[f] != j:
                    continue
                component_edges.add(f)
                b = self.g.other_end(f, a)
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        degree = self.part_degree[j]
        if len({degree[a] for a in seen}) == 1:
            return True
        return all(degree[self.g.edges[f][0]] != degree[self.g.edges[f][1]] for f in component_edges)

    # Search

    def candidate_parts(self) -> range:
        if self.symmetric:
            return range(min(self.t, self.highest_used[-1] + 2))
        return range(self.t)

    def run(self, start: int = 0) -> Optional[EdgePartition]:
        """Search from order position ``start``; raises _Exhausted on budget overrun"""
        return self._descend(start)

    def _descend(self, position: int) -> Optional[EdgePartition]:
        if position == len(self.order):
            partition = EdgePartition.from_assignment(self.assignment, drop_empty=False)
            if verify_partition(self.g, partition, self.preds):
                return partition
            return None
        edge = self.order[position]
        for part in self.candidate_parts():
            if self.push(edge, part):
                found = self._descend(position + 1)
                if found is not None:
                    return found
            self.pop()
        return None

    def prefixes(self, depth: int) -> List[List[int]]:
        """All viable part choices for the first ``depth`` ordered edges"""
        found: List[List[int]] = []

        def expand(position: int, chosen: List[int]):
            if position == depth or position == len(self.order):
                found.append(list(chosen))
                return
            edge = self.order[position]
            for part in self.candidate_parts():
                if self.push(edge, part):
                    chosen.append(part)
                    expand(position + 1, chosen)
                    chosen.pop()
                self.pop()

        expand(0, [])
        return found


def _check_inputs(g: Graph, preds: Sequence[PartPredicate]) -> None:
    if g.edge_count == 0:
        raise PreconditionError("the graph has no edges")
    if not preds:
        raise PreconditionError("at least one part predicate is required")


def _solve_prefix(args) -> Tuple[str, Optional[EdgePartition], int]:
    g, preds, max_nodes, prefix = args
    search = EdgePartitionSearch(g, preds, max_nodes)
    try:
        for position, part in enumerate(prefix):
            if not search.push(search.order[position], part):
                return SolveStatus.INFEASIBLE.value, None, search.nodes
        found = search.run(len(prefix))
    except _Exhausted:
        return SolveStatus.BUDGET_EXHAUSTED.value, None, search.nodes
    if found is None:
        return SolveStatus.INFEASIBLE.value, None, search.nodes
    return SolveStatus.FEASIBLE.value, found, search.nodes


def _decide_parallel(g: Graph, preds: List[PartPredicate], budget: SearchBudget) -> SolveOutcome:
    splitter = EdgePartitionSearch(g, preds, budget.max_nodes)
    depth = 1
    try:
        prefixes = splitter.prefixes(depth)
        while len(prefixes) < 4 * budget.jobs and depth < min(g.edge_count, 12):
            depth += 1
            prefixes = splitter.prefixes(depth)
    except _Exhausted:
        return SolveOutcome(SolveStatus.BUDGET_EXHAUSTED, nodes=splitter.nodes)
    if not prefixes:
        return SolveOutcome(SolveStatus.INFEASIBLE, nodes=splitter.nodes)

    logger.debug("splitting search into %d subtrees across %d workers", len(prefixes), budget.jobs)
    share = max(1, budget.max_nodes // len(prefixes))
    nodes = splitter.nodes
    exhausted = False
    with ProcessPoolExecutor(max_workers=budget.jobs) as pool:
        for status, partition, used in pool.map(_solve_prefix, [(g, preds, share, p) for p in prefixes]):
            nodes += used
            if status == SolveStatus.FEASIBLE.value:
                return SolveOutcome(SolveStatus.FEASIBLE, partition, nodes)
            if status == SolveStatus.BUDGET_EXHAUSTED.value:
                exhausted = True
    status = SolveStatus.BUDGET_EXHAUSTED if exhausted else SolveStatus.INFEASIBLE
    return SolveOutcome(status, nodes=nodes)


def decide(g: Graph, preds: Sequence[PartPredicate], budget: Optional[SearchBudget] = None) -> SolveOutcome:
    """
    Decide whether E(g) splits into len(preds) nonempty parts, part i
    satisfying preds[i]

    Args:
        g: Graph with at least one edge
        preds: One predicate per part
        budget: Node cap and determinism settings

    Returns:
        SolveOutcome; a feasible witness is always verified
    """
    _check_inputs(g, preds)
    budget = budget or SearchBudget()
    preds = list(preds)

    if budget.jobs > 1 and not budget.deterministic:
        outcome = _decide_parallel(g, preds, budget)
    else:
        search = EdgePartitionSearch(g, preds, budget.max_nodes)
        try:
            found = search.run()
        except _Exhausted:
            outcome = SolveOutcome(SolveStatus.BUDGET_EXHAUSTED, nodes=search.nodes)
        else:
            status = SolveStatus.FEASIBLE if found is not None else SolveStatus.INFEASIBLE
            outcome = SolveOutcome(status, found, search.nodes)

    if outcome.feasible and not verify_partition(g, outcome.partition, preds):
        raise AssertionError("search produced a witness that does not verify")
    logger.debug(
        "decide %s on %d edges: %s after %d nodes",
        ",".join(str(p) for p in preds), g.edge_count, outcome.status.value, outcome.nodes,
    )
    return outcome


def min_parts(
    g: Graph,
    p: PartPredicate,
    budget: Optional[SearchBudget] = None,
    max_t: Optional[int] = None,
    progress: bool = False,
) -> MinPartsResult:
    """
    Smallest t such that E(g) splits into t parts all satisfying ``p``

    Args:
        g: Graph with at least one edge
        p: Predicate broadcast to every part
        budget: Budget applied to each part count separately
        max_t: Largest part count tried (defaults to |E|)
        progress: Show a tqdm bar over part counts

    Returns:
        MinPartsResult
    """
    _check_inputs(g, [p])
    budget = budget or SearchBudget()
    limit = g.edge_count if max_t is None else min(max_t, g.edge_count)
    if limit < 1:
        raise PreconditionError("max_t must be positive")

    outcomes = []
    for t in tqdm(range(1, limit + 1), desc=f"min parts ({p})", disable=not progress):
        outcome = decide(g, [p] * t, budget)
        outcomes.append(outcome)
        if outcome.feasible:
            logger.info("%s: %d parts suffice", p, t)
            return MinPartsResult(t, outcome.partition, limit, outcomes=tuple(outcomes))
        if outcome.status is SolveStatus.BUDGET_EXHAUSTED:
            logger.warning("%s: budget exhausted at t=%d", p, t)
            return MinPartsResult(None, None, limit, exhausted_at=t, outcomes=tuple(outcomes))
    return MinPartsResult(None, None, limit, outcomes=tuple(outcomes))
