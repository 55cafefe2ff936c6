"""
Monotone formulas for the three satisfiability variants, brute-force
oracles, the text format and planted random instances
"""
import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from graph_core.errors import FormulaError, ScaleError

logger = logging.getLogger(__name__)

ORACLE_VARIABLE_LIMIT = 24


class Variant(Enum):
    ONE_IN_THREE = "one-in-three"
    NAE = "nae"
    TWO_IN_FOUR = "two-in-four"


def clause_satisfied(variant: Variant, values: Sequence[bool]) -> bool:
    """Clause semantics: exactly one true, both values present, exactly two true"""
    trues = sum(1 for v in values if v)
    if variant is Variant.ONE_IN_THREE:
        return trues == 1
    if variant is Variant.NAE:
        return 0 < trues < len(values)
    return trues == 2


@dataclass(frozen=True)
class Assignment:
    values: Tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    def __getitem__(self, variable: int) -> bool:
        return self.values[variable]

    def __len__(self) -> int:
        return len(self.values)

    def complement(self) -> "Assignment":
        return Assignment(tuple(not v for v in self.values))

    def __str__(self) -> str:
        return " ".join(f"x{i}={'T' if v else 'F'}" for i, v in enumerate(self.values))


@dataclass(frozen=True)
class Formula:
    """
    Monotone formula over variables 0..variable_count-1

    Clauses are tuples of distinct variable indices; negation is not
    representable.
    """

    variable_count: int
    clauses: Tuple[Tuple[int, ...], ...]
    variant: Variant

    def __post_init__(self):
        if self.variable_count < 1:
            raise FormulaError("a formula needs at least one variable")
        clauses = tuple(tuple(int(x) for x in c) for c in self.clauses)
        object.__setattr__(self, "clauses", clauses)
        for number, clause in enumerate(clauses):
            if not clause:
                raise FormulaError(f"clause {number} is empty")
            if any(not 0 <= x < self.variable_count for x in clause):
                raise FormulaError(f"clause {number} names a variable outside 0..{self.variable_count - 1}")
            if len(set(clause)) != len(clause):
                raise FormulaError(f"clause {number} repeats a variable")

    def occurrences(self) -> List[List[int]]:
        """Clause indices containing each variable, in clause order"""
        found: List[List[int]] = [[] for _ in range(self.variable_count)]
        for number, clause in enumerate(self.clauses):
            for x in clause:
                found[x].append(number)
        return found

    def check_variant(self) -> None:
        """
        Raise FormulaError unless the formula meets its variant's shape:
        one-in-three cubic (size 3, three occurrences, even clause count),
        NAE (2,3) cubic (sizes 2 or 3, three occurrences) or two-in-four
        (size 4)
        """
        sizes = {len(c) for c in self.clauses}
        counts = Counter(len(o) for o in self.occurrences())
        cubic = set(counts) == {3}
        v = self.variant
        if not self.clauses:
            raise FormulaError("the formula has no clauses")
        if v is Variant.ONE_IN_THREE:
            if sizes != {3} or not cubic or len(self.clauses) % 2:
                raise FormulaError("one-in-three needs 3-clauses, every variable in 3 clauses, an even clause count")
        elif v is Variant.NAE:
            if not sizes <= {2, 3} or not cubic:
                raise FormulaError("nae needs 2- or 3-clauses and every variable in exactly 3 clauses")
        elif sizes != {4}:
            raise FormulaError("two-in-four needs every clause of size 4")

    def satisfied_by(self, assignment: Assignment) -> bool:
        if len(assignment) != self.variable_count:
            raise FormulaError(f"assignment has {len(assignment)} values for {self.variable_count} variables")
        return all(clause_satisfied(self.variant, [assignment[x] for x in c]) for c in self.clauses)


def _all_assignments(n: int) -> Iterator[Tuple[bool, ...]]:
    return itertools.product((False, True), repeat=n)


def brute_force_assignment(f: Formula) -> Optional[Assignment]:
    """
    First satisfying assignment in lexicographic order (False < True)

    Raises:
        ScaleError: more than 24 variables
    """
    if f.variable_count > ORACLE_VARIABLE_LIMIT:
        raise ScaleError(f"{f.variable_count} variables exceed the oracle limit of {ORACLE_VARIABLE_LIMIT}")
    for values in _all_assignments(f.variable_count):
        candidate = Assignment(values)
        if f.satisfied_by(candidate):
            return candidate
    return None


def parse_formula(data: Union[bytes, str]) -> Formula:
    """
    Parse '<variant> <n> <m>' followed by m lines of 0-based variable indices

    Blank lines and lines starting with '#' are ignored.
    """
    text = data.decode("utf-8", errors="replace") if isinstance(data, bytes) else data
    lines = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise FormulaError("empty formula file")
    number, header = lines[0]
    if len(header) != 3:
        raise FormulaError(f"line {number}: header must be '<variant> <n> <m>'")
    try:
        variant = Variant(header[0])
    except ValueError:
        choices = ", ".join(v.value for v in Variant)
        raise FormulaError(f"line {number}: unknown variant {header[0]!r}; expected one of {choices}") from None
    try:
        n, m = int(header[1]), int(header[2])
    except ValueError:
        raise FormulaError(f"line {number}: variable and clause counts must be integers") from None

    body = lines[1:]
    if len(body) != m:
        raise FormulaError(f"header announces {m} clauses, found {len(body)}")
    clauses = []
    for number, tokens in body:
        try:
            clauses.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise FormulaError(f"line {number}: clause entries must be integers") from None
    return Formula(n, tuple(clauses), variant)


def format_formula(f: Formula) -> str:
    lines = [f"{f.variant.value} {f.variable_count} {len(f.clauses)}"]
    lines += [" ".join(str(x) for x in c) for c in f.clauses]
    return "\n".join(lines) + "\n"


def _group_occurrences(rng: random.Random, pools: List[List[int]], shapes: List[Tuple[int, ...]]) -> Optional[List[Tuple[int, ...]]]:
    """Fill clause shapes (count taken from each pool) with distinct variables"""
    for pool in pools:
        rng.shuffle(pool)
    cursors = [0] * len(pools)
    clauses = []
    for shape in shapes:
        clause = []
        for pool_index, count in enumerate(shape):
            clause += pools[pool_index][cursors[pool_index]:cursors[pool_index] + count]
            cursors[pool_index] += count
        if len(set(clause)) != len(clause):
            return None
        clauses.append(tuple(sorted(clause)))
    return clauses


def random_formula(variant: Variant, seed: Optional[int] = None, size: int = 1, attempts: int = 10_000) -> Tuple[Formula, Assignment]:
    """
    Planted satisfiable instance of ``variant``

    Args:
        variant: Formula variant
        seed: RNG seed
        size: Scale factor (one-in-three: 6*size clauses; nae: 4*size
              variables; two-in-four: 2*size+4 variables, 2*size+1 clauses)
        attempts: Reshuffles allowed before giving up

    Returns:
        Tuple of (formula, planted satisfying assignment)
    """
    if size < 1:
        raise FormulaError("size must be positive")
    rng = random.Random(seed)

    if variant is Variant.TWO_IN_FOUR:
        n = 2 * size + 4
        values = [i % 2 == 0 for i in range(n)]
        rng.shuffle(values)
        trues = [i for i in range(n) if values[i]]
        falses = [i for i in range(n) if not values[i]]
        clauses = tuple(tuple(sorted(rng.sample(trues, 2) + rng.sample(falses, 2))) for _ in range(2 * size + 1))
        f = Formula(n, clauses, variant)
        return f, Assignment(tuple(values))

    # shapes give (true, false) occurrences per clause; every variable occurs three times
    if variant is Variant.ONE_IN_THREE:
        n = 6 * size
        true_count = 2 * size
        shapes = [(1, 2)] * n
    else:
        n = 4 * size
        true_count = 2 * size
        shapes = [(1, 1)] * size + [(2, 1)] * size + [(1, 2)] * size + [(1, 1)] * (2 * size)

    for _ in range(attempts):
        values = [i < true_count for i in range(n)]
        rng.shuffle(values)
        true_pool = [x for x in range(n) if values[x] for _ in range(3)]
        false_pool = [x for x in range(n) if not values[x] for _ in range(3)]
        grouped = _group_occurrences(rng, [true_pool, false_pool], list(shapes))
        if grouped is None:
            continue
        f = Formula(n, tuple(grouped), variant)
        f.check_variant()
        assignment = Assignment(tuple(values))
        if not f.satisfied_by(assignment):
            raise AssertionError("planted assignment does not satisfy its formula")
        return f, assignment
    raise FormulaError(f"no {variant.value} instance found in {attempts} attempts")
