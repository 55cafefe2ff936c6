"""
Variant dispatch for building reduction graphs and converting certificates
between satisfying assignments and edge decompositions
"""
import logging
from dataclasses import dataclass
from typing import List, Optional

from exact_solver.search import SearchBudget, SolveStatus, decide
from graph_core.errors import InvalidPartitionError, PreconditionError
from graph_core.graph import EdgePartition, Graph
from predicates.part_predicates import PartPredicate, verify_partition
from reductions import nae, one_in_three, two_in_four
from reductions.formula import Assignment, Formula, Variant, brute_force_assignment

logger = logging.getLogger(__name__)

# Largest graph on which round trips also compare against the exact solver
SOLVER_EDGE_LIMIT = 20


@dataclass(frozen=True)
class ReductionParams:
    """Gadget size α for NAE and degree gap k for two-in-four"""

    alpha: int = 3
    k: int = 2


def reduce_to_graph(f: Formula, params: Optional[ReductionParams] = None) -> Graph:
    """
    Build the reduction graph of ``f``

    Args:
        f: Formula meeting its variant's shape
        params: α (NAE, >= 3) and k (two-in-four, >= 2)

    Returns:
        Graph with provenance labels
    """
    params = params or ReductionParams()
    f.check_variant()
    if f.variant is Variant.ONE_IN_THREE:
        return one_in_three.build_one_in_three_graph(f)
    if f.variant is Variant.NAE:
        return nae.build_nae_graph(f, params.alpha)
    return two_in_four.build_two_in_four_graph(f, params.k)


def variant_predicates(f: Formula, g: Graph) -> List[PartPredicate]:
    """Part predicates whose two-part decompositions of g encode satisfying assignments"""
    if f.variant is Variant.ONE_IN_THREE:
        return list(one_in_three.PREDICATES)
    if f.variant is Variant.NAE:
        return list(nae.PREDICATES)
    return two_in_four.predicates(two_in_four.two_in_four_k(f, g))


def assignment_to_decomposition(f: Formula, a: Assignment, g: Graph) -> EdgePartition:
    """
    Two-part decomposition of g built from a satisfying assignment

    Raises:
        PreconditionError: ``a`` does not satisfy ``f``
    """
    if not f.satisfied_by(a):
        raise PreconditionError("the assignment does not satisfy the formula")
    if f.variant is Variant.ONE_IN_THREE:
        return one_in_three.one_in_three_decomposition(f, a, g)
    if f.variant is Variant.NAE:
        return nae.nae_decomposition(f, a, g)
    return two_in_four.two_in_four_decomposition(f, a, g)


def decomposition_to_assignment(f: Formula, g: Graph, partition: EdgePartition) -> Assignment:
    """
    Satisfying assignment read off a valid two-part decomposition

    Raises:
        InvalidPartitionError: the partition does not satisfy the variant's predicates
    """
    preds = variant_predicates(f, g)
    valid = len(partition) == 2 and (
        verify_partition(g, partition, preds)
        or verify_partition(g, EdgePartition(partition.parts[::-1]), preds)
    )
    if not valid:
        raise InvalidPartitionError(
            f"partition is not a decomposition into {', '.join(str(p) for p in preds)}"
        )
    if f.variant is Variant.ONE_IN_THREE:
        a = one_in_three.one_in_three_assignment(f, g, partition)
    elif f.variant is Variant.NAE:
        a = nae.nae_assignment(f, g, partition)
    else:
        a = two_in_four.two_in_four_assignment(f, g, partition)
    if not f.satisfied_by(a):
        raise AssertionError(f"extracted assignment {a} does not satisfy the formula")
    return a


@dataclass(frozen=True)
class RoundTripResult:
    """Outcome of one assignment -> decomposition -> assignment cycle"""

    satisfiable: bool
    edges: int
    partition: Optional[EdgePartition] = None
    recovered: Optional[Assignment] = None
    solver_status: Optional[SolveStatus] = None

    @property
    def solver_agrees(self) -> Optional[bool]:
        """None when the graph was too large for the solver comparison"""
        if self.solver_status is None or self.solver_status is SolveStatus.BUDGET_EXHAUSTED:
            return None
        return (self.solver_status is SolveStatus.FEASIBLE) == self.satisfiable


def round_trip(f: Formula, params: Optional[ReductionParams] = None, budget: Optional[SearchBudget] = None) -> RoundTripResult:
    """
    Brute-force an assignment, convert it to a decomposition and back, and
    on small graphs compare the solver's verdict with satisfiability
    """
    g = reduce_to_graph(f, params)
    a = brute_force_assignment(f)
    status = None
    if g.edge_count <= SOLVER_EDGE_LIMIT:
        status = decide(g, variant_predicates(f, g), budget).status

    if a is None:
        logger.info("%s formula is unsatisfiable; %d edges", f.variant.value, g.edge_count)
        return RoundTripResult(False, g.edge_count, solver_status=status)

    partition = assignment_to_decomposition(f, a, g)
    recovered = decomposition_to_assignment(f, g, partition)
    logger.info("%s round trip on %d edges recovered %s", f.variant.value, g.edge_count, recovered)
    return RoundTripResult(True, g.edge_count, partition, recovered, status)
