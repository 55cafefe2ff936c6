#!/usr/bin/env python3
"""
Main entry point for the edge decomposition toolkit
"""
import sys
import argparse
import logging
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

EXIT_OK = 0
EXIT_NO = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64
EXIT_DATA = 65

POLY_ALGORITHMS = (
    "max-matching",
    "two-factor",
    "two-regular",
    "tree-matching-plus",
    "tree-two-matchings",
    "tree-delta",
    "k-irr-conditions",
    "k-irr-two-parts",
    "semi-coloring",
)
RANDOM_KINDS = ("random-tree", "random-graph", "random-k-irr")

logger = logging.getLogger("edge_decomp")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit status 64"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_input(path):
    if path is None or path == "-":
        return sys.stdin.buffer.read()
    return Path(path).read_bytes()


def _write_output(data: bytes, path=None):
    if path:
        Path(path).write_bytes(data + b"\n")
        print(f"✓ Wrote {path}", file=sys.stderr)
    else:
        sys.stdout.buffer.write(data + b"\n")
        sys.stdout.flush()


def _load_graph(args):
    from graph_core.graph_io import parse_graph
    return parse_graph(_read_input(args.graph), args.format)


def _budget(args, settings):
    from exact_solver.search import SearchBudget
    return SearchBudget(
        max_nodes=args.budget or settings.budget,
        deterministic=args.deterministic,
        jobs=args.jobs or settings.jobs,
    )


def _emit_partition(g, partition, args):
    from graph_core.graph_io import format_partition, serialize_graph

    print(format_partition(g, partition))
    if getattr(args, "dot", None):
        Path(args.dot).write_bytes(serialize_graph(g, "dot", partition) + b"\n")
        print(f"✓ DOT written to {args.dot}", file=sys.stderr)
    if getattr(args, "plot", None):
        from graph_core.drawing import draw_partition
        draw_partition(g, partition, args.plot)
        print(f"✓ Plot written to {args.plot}", file=sys.stderr)


def cmd_check(args, settings):
    from predicates.part_predicates import parse_predicate_spec, satisfies

    g = _load_graph(args)
    verdicts = []
    for pred in parse_predicate_spec(args.pred, k=args.k):
        verdict = satisfies(g, g.all_edges, pred)
        verdicts.append(verdict)
        print(f"{pred}: {'true' if verdict else 'false'}")
    return EXIT_OK if all(verdicts) else EXIT_NO


def cmd_solve(args, settings):
    from exact_solver.search import SolveStatus, decide, min_parts
    from predicates.part_predicates import parse_predicate_spec

    g = _load_graph(args)
    budget = _budget(args, settings)

    if args.min_parts:
        preds = parse_predicate_spec(args.pred, k=args.k)
        if len(preds) != 1:
            raise UsageError("--min-parts takes a single predicate")
        result = min_parts(g, preds[0], budget, args.max_t, progress=args.verbose)
        if result.parts is None:
            print(result.status.value)
            return EXIT_BUDGET if result.status is SolveStatus.BUDGET_EXHAUSTED else EXIT_NO
        print(result.parts)
        _emit_partition(g, result.witness, args)
        return EXIT_OK

    preds = parse_predicate_spec(args.pred, args.parts, args.k)
    outcome = decide(g, preds, budget)
    print(outcome.status.value)
    if outcome.feasible:
        _emit_partition(g, outcome.partition, args)
        return EXIT_OK
    return EXIT_BUDGET if outcome.status is SolveStatus.BUDGET_EXHAUSTED else EXIT_NO


def cmd_poly(args, settings):
    from graph_core.graph_io import format_partition

    g = _load_graph(args)
    alg = args.algorithm

    if alg in ("max-matching", "two-factor"):
        from poly_algorithms.matching import max_matching, two_factor
        edges = max_matching(g) if alg == "max-matching" else two_factor(g)
        if edges is None:
            print("none")
            return EXIT_NO
        print(f"{alg}: " + " ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in sorted(edges)))
        return EXIT_OK

    if alg in ("k-irr-conditions", "k-irr-two-parts") and args.k is None:
        raise UsageError(f"{alg} needs --k")

    if alg == "k-irr-conditions":
        from poly_algorithms.k_irregular import k_irregular_conditions
        report = k_irregular_conditions(g, args.k)
        for name, held in (("A", report.condition_a), ("B", report.condition_b), ("C", report.condition_c)):
            print(f"condition {name}: {'true' if held else 'false'}")
        if report.violating_edge is not None:
            print(f"violating edge: {report.violating_edge[0]}-{report.violating_edge[1]}")
        return EXIT_OK if report.all_hold else EXIT_NO

    if alg == "semi-coloring":
        from poly_algorithms.semi_coloring import extract_locally_regular_parts, find_semi_coloring
        sc = find_semi_coloring(g, _budget(args, settings))
        if sc is None:
            print("budget-exhausted")
            return EXIT_BUDGET
        for e, (u, v) in enumerate(g.edges):
            print(f"{u}-{v}: {{{','.join(str(c) for c in sorted(sc[e]))}}}")
        partition = extract_locally_regular_parts(g, sc)
    elif alg == "two-regular":
        from poly_algorithms.regular_parts import two_regular_parts_low_degree
        partition = two_regular_parts_low_degree(g)
    elif alg == "k-irr-two-parts":
        from poly_algorithms.k_irregular import k_irregular_two_parts
        partition = k_irregular_two_parts(g, args.k)
    else:
        from poly_algorithms import trees
        build = {
            "tree-matching-plus": trees.tree_matching_plus,
            "tree-two-matchings": trees.tree_two_matchings_irregular,
            "tree-delta": trees.tree_delta_matchings,
        }[alg]
        partition = build(g)

    if partition is None:
        print("none")
        return EXIT_NO
    print(format_partition(g, partition))
    return EXIT_OK


def cmd_gen(args, settings):
    from graph_core.graph_io import serialize_graph

    if args.kind in RANDOM_KINDS:
        from graph_core import generators
        if args.kind == "random-tree":
            g = generators.random_tree(args.n, args.seed)
        elif args.kind == "random-graph":
            g = generators.random_connected_graph(args.n, args.m or args.n - 1, args.seed, args.max_degree)
        else:
            if args.k is None:
                raise UsageError("random-k-irr needs --k")
            g = generators.random_k_irregular_instance(args.k, args.hubs, args.seed)
    else:
        from gadget_forge.gadgets import GadgetFamily, GadgetKind, build_gadget
        spec = GadgetKind(GadgetFamily(args.kind), k=args.k, alpha=args.alpha, p=args.p)
        logger.info("building %s", spec)
        g = build_gadget(spec)

    _write_output(serialize_graph(g, args.format), args.output)
    return EXIT_OK


def _round_trip_line(f, result):
    solver = {None: "n/a", True: "agrees", False: "DISAGREES"}[result.solver_agrees]
    if not result.satisfiable:
        return f"{f.variant.value}: unsatisfiable, {result.edges} edges, solver {solver}"
    return f"{f.variant.value}: satisfiable, {result.edges} edges, recovered {result.recovered}, solver {solver}"


def cmd_reduce(args, settings):
    from exact_solver.search import SearchBudget
    from graph_core.graph_io import serialize_graph
    from reductions.converters import ReductionParams, reduce_to_graph, round_trip
    from reductions.formula import Variant, parse_formula, random_formula

    params = ReductionParams(alpha=args.alpha, k=args.k)

    if args.random:
        variant = Variant(args.random)
        seeds = range(args.seed, args.seed + args.count)
        formulas = [random_formula(variant, seed, args.size)[0] for seed in seeds]
    elif args.formula:
        formulas = [parse_formula(_read_input(args.formula))]
    else:
        raise UsageError("give a formula file or --random VARIANT")

    if not args.round_trip:
        if len(formulas) != 1:
            raise UsageError("--count above 1 needs --round-trip")
        g = reduce_to_graph(formulas[0], params)
        _write_output(serialize_graph(g, args.format), args.output)
        return EXIT_OK

    from tqdm import tqdm

    budget = SearchBudget(max_nodes=args.budget or settings.budget)
    status = EXIT_OK
    for f in tqdm(formulas, desc="round trips", disable=len(formulas) == 1 or not args.verbose):
        result = round_trip(f, params, budget)
        print(_round_trip_line(f, result))
        if result.solver_agrees is False or not result.satisfiable:
            status = EXIT_NO
    return status


def cmd_verify(args, settings):
    from graph_core.errors import InvalidPartitionError
    from graph_core.graph_io import parse_partition
    from predicates.part_predicates import parse_predicate_spec, satisfies

    g = _load_graph(args)
    partition = parse_partition(_read_input(args.partition), g)
    if not partition.parts:
        raise InvalidPartitionError(f"partition file {args.partition} has no parts")
    preds = parse_predicate_spec(args.pred, args.parts or len(partition), args.k)

    problems = partition.problems(g)
    for i, (part, pred) in enumerate(zip(partition.parts, preds)):
        if part and not satisfies(g, part, pred):
            problems.append(f"part {i} is not {pred}")
    if problems:
        print("invalid")
        for problem in problems:
            print(f"  {problem}")
        return EXIT_NO
    print("valid")
    return EXIT_OK


def _add_graph_input(p):
    p.add_argument("graph", nargs="?", default="-", help="Graph file ('-' or omitted reads stdin)")
    p.add_argument(
        "--format",
        default="edge-list",
        choices=["edge-list", "graph6"],
        help="Input graph format (default: edge-list)"
    )


def _add_predicate(p, required=True):
    p.add_argument("--pred", required=required, help="Predicate spec, e.g. 'regular,locally-irregular' or 'k-irr'")
    p.add_argument("--k", type=int, help="k for k-irr")


def _add_budget(p):
    p.add_argument("--budget", type=int, help="Search node cap (default: EDGEDECOMP_BUDGET or 2000000)")
    p.add_argument("--deterministic", action="store_true", help="Sequential search with a reproducible witness")
    p.add_argument("--jobs", type=int, help="Worker processes when not deterministic (default: EDGEDECOMP_JOBS or 1)")


def build_parser():
    from gadget_forge.gadgets import GadgetFamily
    from reductions.formula import Variant

    parser = _Parser(
        prog="edge-decomp",
        description="Decompose graph edge sets into regular, locally regular and locally irregular parts",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Check a predicate on a whole graph
  python main.py check path.txt --pred locally-irregular

  # Pipe a gadget into the exact solver
  python main.py gen tree-regirr3 | python main.py solve --pred reg-or-irr --parts 2

  # Smallest number of locally 1-irregular parts
  python main.py gen lower-bound-2k1 --k 1 | python main.py solve --pred k-irr --k 1 --min-parts

  # Reduction round trips on planted formulas
  python main.py reduce --random nae --count 20 --round-trip
        """
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging and progress bars")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("check", help="Evaluate predicates on the whole edge set")
    _add_graph_input(p)
    _add_predicate(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("solve", help="Exact decomposition search")
    _add_graph_input(p)
    _add_predicate(p)
    p.add_argument("--parts", type=int, help="Broadcast a single predicate to this many parts")
    p.add_argument("--min-parts", action="store_true", help="Find the smallest feasible part count")
    p.add_argument("--max-t", type=int, help="Largest part count tried by --min-parts (default: |E|)")
    _add_budget(p)
    p.add_argument("--dot", help="Write the coloured graph as DOT to this path")
    p.add_argument("--plot", help="Render the coloured graph as PNG to this path")
    p.set_defaults(handler=cmd_solve)

    p = sub.add_parser("poly", help="Run a polynomial-time algorithm")
    p.add_argument("algorithm", choices=POLY_ALGORITHMS)
    _add_graph_input(p)
    p.add_argument("--k", type=int, help="k for the k-irr algorithms")
    _add_budget(p)
    p.set_defaults(handler=cmd_poly)

    p = sub.add_parser("gen", help="Emit a gadget or random graph")
    p.add_argument("kind", choices=[f.value for f in GadgetFamily] + list(RANDOM_KINDS))
    p.add_argument("--k", type=int)
    p.add_argument("--alpha", type=int)
    p.add_argument("--p", type=int, help="Prime for mols (default: a prime in [k/10, k/5])")
    p.add_argument("--n", type=int, default=10, help="Vertices for random kinds (default: 10)")
    p.add_argument("--m", type=int, help="Edges for random-graph (default: n-1)")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--hubs", type=int, default=3, help="Hubs for random-k-irr (default: 3)")
    p.add_argument("--seed", type=int)
    p.add_argument("--format", default="edge-list", choices=["edge-list", "graph6", "dot"])
    p.add_argument("-o", "--output", help="Output file (default: stdout)")
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("reduce", help="Build a reduction graph or run certificate round trips")
    p.add_argument("formula", nargs="?", help="Formula file ('-' reads stdin)")
    p.add_argument("--random", choices=[v.value for v in Variant], help="Use planted random formulas")
    p.add_argument("--count", type=int, default=1, help="Number of random formulas (default: 1)")
    p.add_argument("--size", type=int, default=1, help="Random formula scale (default: 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--alpha", type=int, default=3, help="NAE gadget size (default: 3)")
    p.add_argument("--k", type=int, default=2, help="two-in-four degree gap (default: 2)")
    p.add_argument("--round-trip", action="store_true", help="Assignment to decomposition and back")
    p.add_argument("--budget", type=int, help="Node cap for the solver comparison")
    p.add_argument("--format", default="edge-list", choices=["edge-list", "graph6", "dot"])
    p.add_argument("-o", "--output", help="Output file (default: stdout)")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("verify", help="Validate a partition file against predicates")
    _add_graph_input(p)
    p.add_argument("partition", help="Partition file with 'part i: u-v ...' lines")
    _add_predicate(p)
    p.add_argument("--parts", type=int, help="Broadcast a single predicate to this many parts")
    p.set_defaults(handler=cmd_verify)

    return parser


def run(argv=None) -> int:
    from graph_core.errors import (
        FormulaError,
        GraphFormatError,
        InvalidPartitionError,
        InvalidSubsetError,
        ParameterError,
        PreconditionError,
        ScaleError,
    )
    from settings import Settings

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        settings = Settings.from_env()
    except ParameterError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.logging_level,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    if not getattr(args, "handler", None):
        parser.print_help()
        return EXIT_USAGE

    try:
        return args.handler(args, settings)
    except (UsageError, PreconditionError, ParameterError, ScaleError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, FormulaError, InvalidPartitionError, InvalidSubsetError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DATA
    except OSError as e:
        print(f"Error: cannot read {e.filename}: {e.strerror}", file=sys.stderr)
        return EXIT_DATA


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
