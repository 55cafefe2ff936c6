"""
Part validity predicates over edge-induced subgraphs
"""
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence

from graph_core.errors import PreconditionError
from graph_core.graph import EdgePartition, Graph, check_subset, components, degree_profile


class PredicateKind(Enum):
    REGULAR = "regular"
    LOCALLY_REGULAR = "locally-regular"
    LOCALLY_IRREGULAR = "locally-irregular"
    LOCALLY_K_IRREGULAR = "k-irr"
    REGULAR_OR_LOCALLY_IRREGULAR = "reg-or-irr"
    COMPONENTWISE_REGULAR_OR_LOCALLY_IRREGULAR = "componentwise-reg-or-irr"
    MATCHING = "matching"


@dataclass(frozen=True)
class PartPredicate:
    """Validity condition for one part; ``k`` is used by LOCALLY_K_IRREGULAR only"""

    kind: PredicateKind
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind is PredicateKind.LOCALLY_K_IRREGULAR:
            if self.k is None or self.k < 1:
                raise PreconditionError("k-irr needs k >= 1")
        elif self.k is not None:
            object.__setattr__(self, "k", None)

    def __str__(self) -> str:
        if self.kind is PredicateKind.LOCALLY_K_IRREGULAR:
            return f"{self.kind.value}({self.k})"
        return self.kind.value

    @property
    def min_difference(self) -> int:
        """Required endpoint degree gap for irregularity predicates"""
        if self.kind is PredicateKind.LOCALLY_K_IRREGULAR:
            return self.k
        return 1

    @classmethod
    def regular(cls) -> "PartPredicate":
        return cls(PredicateKind.REGULAR)

    @classmethod
    def locally_regular(cls) -> "PartPredicate":
        return cls(PredicateKind.LOCALLY_REGULAR)

    @classmethod
    def locally_irregular(cls) -> "PartPredicate":
        return cls(PredicateKind.LOCALLY_IRREGULAR)

    @classmethod
    def locally_k_irregular(cls, k: int) -> "PartPredicate":
        return cls(PredicateKind.LOCALLY_K_IRREGULAR, k)

    @classmethod
    def regular_or_locally_irregular(cls) -> "PartPredicate":
        return cls(PredicateKind.REGULAR_OR_LOCALLY_IRREGULAR)

    @classmethod
    def componentwise_regular_or_locally_irregular(cls) -> "PartPredicate":
        return cls(PredicateKind.COMPONENTWISE_REGULAR_OR_LOCALLY_IRREGULAR)

    @classmethod
    def matching(cls) -> "PartPredicate":
        return cls(PredicateKind.MATCHING)


def parse_predicate(name: str, k: Optional[int] = None) -> PartPredicate:
    """Parse one predicate name such as 'locally-irregular' or 'k-irr'"""
    name = name.strip()
    try:
        kind = PredicateKind(name)
    except ValueError:
        choices = ", ".join(p.value for p in PredicateKind)
        raise PreconditionError(f"unknown predicate {name!r}; expected one of {choices}") from None
    if kind is PredicateKind.LOCALLY_K_IRREGULAR and k is None:
        raise PreconditionError("predicate k-irr needs --k")
    return PartPredicate(kind, k)


def parse_predicate_spec(spec: str, parts: Optional[int] = None, k: Optional[int] = None) -> List[PartPredicate]:
    """
    Parse a predicate spec into one predicate per part

    Args:
        spec: Comma-separated predicates, or a single predicate
        parts: Broadcast a single predicate to this many parts
        k: Value for every k-irr entry

    Returns:
        List of PartPredicate
    """
    names = [n for n in spec.split(",") if n.strip()]
    if not names:
        raise PreconditionError("empty predicate spec")
    preds = [parse_predicate(n, k) for n in names]
    if parts is not None:
        if parts < 1:
            raise PreconditionError("--parts must be positive")
        if len(preds) == 1:
            preds = preds * parts
        elif len(preds) != parts:
            raise PreconditionError(f"{len(preds)} predicates given for {parts} parts")
    return preds


def _is_regular(profile: Dict[int, int]) -> bool:
    return len(set(profile.values())) == 1


def _irregular_with_gap(g: Graph, s: Iterable[int], profile: Dict[int, int], gap: int) -> bool:
    for e in s:
        u, v = g.edges[e]
        if abs(profile[u] - profile[v]) < gap:
            return False
    return True


def satisfies(g: Graph, s: Iterable[int], p: PartPredicate) -> bool:
    """
    Decide whether the edge-induced subgraph of ``s`` satisfies ``p``

    Args:
        g: Host graph
        s: Nonempty edge subset
        p: Predicate

    Returns:
        True when the part is valid
    """
    subset = check_subset(g, s)
    if not subset:
        raise PreconditionError("parts are nonempty; got an empty edge subset")
    profile = degree_profile(g, subset)
    kind = p.kind

    if kind is PredicateKind.REGULAR:
        return _is_regular(profile)
    if kind is PredicateKind.MATCHING:
        return all(d == 1 for d in profile.values())
    if kind is PredicateKind.LOCALLY_REGULAR:
        return all(profile[g.edges[e][0]] == profile[g.edges[e][1]] for e in subset)
    if kind in (PredicateKind.LOCALLY_IRREGULAR, PredicateKind.LOCALLY_K_IRREGULAR):
        return _irregular_with_gap(g, subset, profile, p.min_difference)
    if kind is PredicateKind.REGULAR_OR_LOCALLY_IRREGULAR:
        return _is_regular(profile) or _irregular_with_gap(g, subset, profile, 1)
    if kind is PredicateKind.COMPONENTWISE_REGULAR_OR_LOCALLY_IRREGULAR:
        whole = PartPredicate.regular_or_locally_irregular()
        return all(satisfies(g, component, whole) for component in components(g, subset))
    raise PreconditionError(f"unhandled predicate {p}")


def verify_partition(g: Graph, partition: EdgePartition, preds: Sequence[PartPredicate]) -> bool:
    """
    True iff ``partition`` partitions E(g) and part i satisfies preds[i]

    A single predicate is broadcast to every part.
    """
    preds = list(preds)
    if len(preds) == 1 and len(partition) != 1:
        preds = preds * len(partition)
    if len(preds) != len(partition):
        raise PreconditionError(f"{len(preds)} predicates for {len(partition)} parts")
    if not partition.is_valid_for(g):
        return False
    return all(satisfies(g, part, pred) for part, pred in zip(partition.parts, preds))
