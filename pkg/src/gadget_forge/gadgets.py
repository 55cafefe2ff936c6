"""
Deterministic constructors for the extremal trees, reduction gadgets and
lower-bound graphs

Every constructor exists in two forms: an ``add_*`` function that writes the
gadget into a shared GadgetBuilder under a name prefix (used by the
reductions), and a GadgetKind entry built through ``build_gadget``.
Vertex labels are dotted provenance names, e.g. ``c3.x'2`` or ``t2.p4.1``.
"""
import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence

from gadget_forge.builder import GadgetBuilder
from gadget_forge.latin_squares import cyclic_mols, is_prime, window_prime
from graph_core.errors import ParameterError
from graph_core.graph import EdgeSubset, Graph

logger = logging.getLogger(__name__)

# Bad vertex of the auxiliary 3,3,3,1 tree: the end of its length-1 path
BAD_VERTEX = "p4.1"


def scoped(prefix: str, name: str) -> str:
    return f"{prefix}.{name}" if prefix else name


class GadgetFamily(Enum):
    TREE_REG_IRR3 = "tree-regirr3"
    TREE_T1 = "tree-t1"
    TREE_NO_MATCHING_IRREGULAR = "tree-no-matching-irregular"
    GADGET_H = "gadget-h"
    GADGET_I = "gadget-i"
    GADGET_S = "gadget-s"
    GADGET_W = "gadget-w"
    GADGET_A = "gadget-a"
    GADGET_D = "gadget-d"
    GADGET_B = "gadget-b"
    LOWER_BOUND_2K1 = "lower-bound-2k1"
    LOWER_BOUND_4K = "lower-bound-4k"
    MOLS = "mols"


@dataclass(frozen=True)
class GadgetKind:
    """A gadget family with its parameters; ranges are checked on construction"""

    family: GadgetFamily
    k: Optional[int] = None
    alpha: Optional[int] = None
    p: Optional[int] = None

    def __post_init__(self):
        f = self.family
        if f in (GadgetFamily.GADGET_H, GadgetFamily.GADGET_I):
            self._need("alpha", 3)
        elif f is GadgetFamily.TREE_NO_MATCHING_IRREGULAR:
            self._need("k", 3)
        elif f is GadgetFamily.GADGET_A:
            self._need("alpha", 1)
            self._need("k", 2)
        elif f in (GadgetFamily.GADGET_D, GadgetFamily.GADGET_B):
            self._need("k", 2)
        elif f is GadgetFamily.LOWER_BOUND_2K1:
            self._need("k", 1)
        elif f is GadgetFamily.LOWER_BOUND_4K:
            self._need("k", 4)
        elif f is GadgetFamily.MOLS:
            self._need("k", 2)
            if self.p is None:
                object.__setattr__(self, "p", window_prime(self.k))
            if not is_prime(self.p):
                raise ParameterError(f"{f.value}: p={self.p} is not prime")
            if self.p > self.k // 2 + 1:
                raise ParameterError(f"{f.value}: p={self.p} exceeds floor(k/2)+1 = {self.k // 2 + 1}")

    def _need(self, field_name: str, minimum: int) -> None:
        value = getattr(self, field_name)
        if value is None or value < minimum:
            raise ParameterError(f"{self.family.value} needs {field_name} >= {minimum}, got {value}")

    def __str__(self) -> str:
        params = [f"{n}={getattr(self, n)}" for n in ("alpha", "k", "p") if getattr(self, n) is not None]
        return f"{self.family.value}({', '.join(params)})" if params else self.family.value


# Trees


def add_spider(b: GadgetBuilder, prefix: str, at_v: Sequence[int], at_u: Sequence[int]) -> List[List[str]]:
    """
    Edge v-u with paths hanging from v (lengths ``at_v``) and from u
    (lengths ``at_u``); path i has vertices p{i}.1 .. p{i}.L away from its root

    Returns:
        Vertex names of each path, root excluded
    """
    v, u = scoped(prefix, "v"), scoped(prefix, "u")
    b.edge(v, u)
    paths = []
    for number, (root, length) in enumerate([(v, n) for n in at_v] + [(u, n) for n in at_u], start=1):
        names = [scoped(prefix, f"p{number}.{step}") for step in range(1, length + 1)]
        b.path([root] + names)
        paths.append(names)
    return paths


def add_tree_no_matching_irregular(b: GadgetBuilder, prefix: str, k: int) -> None:
    """k copies of the 3,3,3,1 tree with every bad vertex joined to z"""
    z = scoped(prefix, "z")
    for copy in range(1, k + 1):
        copy_prefix = scoped(prefix, f"t{copy}")
        add_spider(b, copy_prefix, (3, 3), (3, 1))
        b.edge(scoped(copy_prefix, BAD_VERTEX), z)


# Regular-decomposition gadgets


def _k_alpha_pair(b: GadgetBuilder, prefix: str, alpha: int) -> Dict[str, List[str]]:
    """Two copies K[X,Y], K'[X',Y'] of K_{alpha,alpha}"""
    sides = {}
    for side in ("x", "y", "x'", "y'"):
        sides[side] = b.vertices(scoped(prefix, f"{side}{i}") for i in range(1, alpha + 1))
    b.complete_bipartite(sides["x"], sides["y"])
    b.complete_bipartite(sides["x'"], sides["y'"])
    return sides


def add_gadget_i(b: GadgetBuilder, prefix: str, alpha: int) -> None:
    """
    Gadget for a 2-clause: hub b joined to x1..x(α-1), x'1..x'(α-1) and hub
    b' joined to the matching y vertices, with the matching x_i y_i removed
    """
    sides = _k_alpha_pair(b, prefix, alpha)
    hub, hub_prime = scoped(prefix, "b"), scoped(prefix, "b'")
    for x_side, y_side in (("x", "y"), ("x'", "y'")):
        for i in range(alpha - 1):
            b.edge(hub, sides[x_side][i])
            b.edge(hub_prime, sides[y_side][i])
            b.remove_edge(sides[x_side][i], sides[y_side][i])


def add_gadget_h(b: GadgetBuilder, prefix: str, alpha: int) -> None:
    """
    Gadget for a 3-clause: x_α and x'_α identified, hub a joined to
    x1..x(α-1), x'1..x'(α-2), hub a' to the matching y vertices, matching removed
    """
    sides = _k_alpha_pair(b, prefix, alpha)
    hub, hub_prime = scoped(prefix, "a"), scoped(prefix, "a'")
    for x_side, y_side, count in (("x", "y", alpha - 1), ("x'", "y'", alpha - 2)):
        for i in range(count):
            b.edge(hub, sides[x_side][i])
            b.edge(hub_prime, sides[y_side][i])
            b.remove_edge(sides[x_side][i], sides[y_side][i])
    b.identify(sides["x"][-1], sides["x'"][-1])


def add_gadget_s(b: GadgetBuilder, prefix: str, cycle_names: Sequence[str] = ("v1", "v2", "v3")) -> None:
    """
    Six-cycle v1 u1 v2 u2 v3 u3 with a triangle hung from each u_i by one
    blue edge; ``cycle_names`` renames v1..v3
    """
    ring = []
    for i, name in enumerate(cycle_names, start=1):
        ring += [scoped(prefix, name), scoped(prefix, f"u{i}")]
    b.cycle(ring)
    for i in range(1, 4):
        triangle = [scoped(prefix, f"t{i}{corner}") for corner in "abc"]
        b.cycle(triangle)
        b.edge(scoped(prefix, f"u{i}"), triangle[0])


def add_gadget_w(b: GadgetBuilder, prefix: str) -> None:
    add_gadget_s(b, scoped(prefix, "s1"), [scoped(prefix, f"x{i}") for i in range(1, 4)])
    add_gadget_s(b, scoped(prefix, "s2"), [scoped(prefix, f"x'{i}") for i in range(1, 4)])


def _role(g: Graph, v: int) -> str:
    return g.label(v).split("=")[0].rsplit(".", 1)[-1]


def blue_edges(g: Graph) -> EdgeSubset:
    """Edges joining a u_i of an S copy to its triangle"""
    blue = set()
    for index, (a, c) in enumerate(g.edges):
        roles = sorted((_role(g, a), _role(g, c)))
        if re.fullmatch(r"t\da", roles[0]) and re.fullmatch(r"u\d", roles[1]) and roles[0][1] == roles[1][1]:
            blue.add(index)
    return frozenset(blue)


# Locally k-irregular gadgets


def main_vertex(i: int) -> str:
    """Name of the i-th main vertex of an A gadget"""
    return f"w{i}_1"


def add_gadget_a(b: GadgetBuilder, prefix: str, alpha: int, k: int) -> None:
    """Cycle v1 v'1 u1 u'1 ... of length 4α; v_i gets leaves w^i, u_i gets leaves z^i (k-1 each)"""
    ring = []
    for i in range(1, alpha + 1):
        ring += [scoped(prefix, f"{name}{i}") for name in ("v", "v'", "u", "u'")]
    b.cycle(ring)
    for i in range(1, alpha + 1):
        b.star(scoped(prefix, f"v{i}"), [scoped(prefix, f"w{i}_{j}") for j in range(1, k)])
        b.star(scoped(prefix, f"u{i}"), [scoped(prefix, f"z{i}_{j}") for j in range(1, k)])


def add_gadget_d(b: GadgetBuilder, prefix: str, k: int) -> None:
    b.path([scoped(prefix, f"p{i}") for i in range(1, 6)])
    b.star(scoped(prefix, "p2"), [scoped(prefix, f"q{j}") for j in range(1, k)])
    b.star(scoped(prefix, "p4"), [scoped(prefix, f"q'{j}") for j in range(1, k)])


def add_gadget_b(b: GadgetBuilder, prefix: str, k: int) -> str:
    """Clause vertex c joined to both path ends of k-1 copies of D; returns c"""
    c = b.vertex(scoped(prefix, "c"))
    for copy in range(1, k):
        copy_prefix = scoped(prefix, f"d{copy}")
        add_gadget_d(b, copy_prefix, k)
        b.edge(c, scoped(copy_prefix, "p1"))
        b.edge(c, scoped(copy_prefix, "p5"))
    return c


def add_lower_bound_2k1(b: GadgetBuilder, prefix: str, k: int) -> None:
    v1, v2, v3 = (scoped(prefix, f"v{i}") for i in range(1, 4))
    b.cycle([v1, v2, v3])
    b.star(v1, [scoped(prefix, f"a{j}") for j in range(1, k)])
    b.star(v2, [scoped(prefix, f"b{j}") for j in range(1, 2 * k + 1)])
    for i in range(1, 2 * k):
        u = scoped(prefix, f"u{i}")
        b.edge(v3, u)
        b.star(u, [scoped(prefix, f"u{i}_{j}") for j in range(1, k + 1)])


def _add_lower_bound_4k_copy(b: GadgetBuilder, prefix: str, k: int) -> None:
    v1, v2, v3 = (scoped(prefix, f"v{i}") for i in range(1, 4))
    b.cycle([v1, v2, v3])
    b.star(v1, [scoped(prefix, f"a{j}") for j in range(1, k - 1)])
    hubs = [scoped(prefix, f"u{i}") for i in range(1, 2 * k - 1)]
    b.star(v2, hubs)
    b.star(v3, [scoped(prefix, f"c{j}") for j in range(1, 3 * k - 1)])
    # u_(2k-2) stays a leaf
    for i, u in enumerate(hubs[:-1], start=1):
        b.star(u, [scoped(prefix, f"u{i}_{j}") for j in range(1, k + 1)])


def add_lower_bound_4k(b: GadgetBuilder, prefix: str, k: int) -> None:
    for copy in range(1, 4 * k + 1):
        copy_prefix = scoped(prefix, f"s{copy}")
        _add_lower_bound_4k_copy(b, copy_prefix, k)
        for i in range(1, 4):
            b.edge(scoped(prefix, f"z{i}"), scoped(copy_prefix, f"v{i}"))


def mols_leaf(copy: int, i: int, j: int) -> str:
    return f"w{copy}_{i}_{j}"


def add_mols_graph(b: GadgetBuilder, prefix: str, k: int, p: int) -> None:
    """
    p cliques K_(floor(k/2)+1); v_i of each clique gets ceil(k/2)+i leaves;
    leaf w^1_ij is identified with w^r_aj whenever the (r-1)-th cyclic
    Latin square has a at (i, j)
    """
    size = k // 2 + 1
    extra = math.ceil(k / 2)
    for copy in range(1, p + 1):
        clique = [scoped(prefix, f"v{copy}_{i}") for i in range(1, size + 1)]
        b.complete(clique)
        for i, center in enumerate(clique, start=1):
            b.star(center, [scoped(prefix, mols_leaf(copy, i, j)) for j in range(1, extra + i + 1)])

    for r, square in enumerate(cyclic_mols(p), start=2):
        for i in range(1, p + 1):
            for j in range(1, p + 1):
                b.identify(scoped(prefix, mols_leaf(1, i, j)), scoped(prefix, mols_leaf(r, square[i, j], j)))


def mols_covering_holds(g: Graph, k: int, p: int) -> bool:
    """
    For every pair of copies 2 <= α < α' <= p and rows β <= β', some column
    j has leaves w^α_βj and w^α'_β'j merged into one vertex
    """
    GadgetKind(GadgetFamily.MOLS, k=k, p=p)
    for alpha in range(2, p + 1):
        for alpha_prime in range(alpha + 1, p + 1):
            for beta in range(1, p + 1):
                for beta_prime in range(beta, p + 1):
                    if not any(
                        g.vertex_named(mols_leaf(alpha, beta, j)) == g.vertex_named(mols_leaf(alpha_prime, beta_prime, j))
                        for j in range(1, p + 1)
                    ):
                        logger.debug("copies %d,%d rows %d,%d share no leaf", alpha, alpha_prime, beta, beta_prime)
                        return False
    return True


def build_gadget(spec: GadgetKind) -> Graph:
    """
    Build the graph described by ``spec``

    Args:
        spec: Gadget family and parameters

    Returns:
        Graph with provenance labels, numbered in construction order
    """
    b = GadgetBuilder()
    f = spec.family
    if f is GadgetFamily.TREE_REG_IRR3:
        add_spider(b, "", (6, 6), (2, 2))
    elif f is GadgetFamily.TREE_T1:
        add_spider(b, "", (4, 4), (2, 2))
    elif f is GadgetFamily.TREE_NO_MATCHING_IRREGULAR:
        add_tree_no_matching_irregular(b, "", spec.k)
    elif f is GadgetFamily.GADGET_H:
        add_gadget_h(b, "", spec.alpha)
    elif f is GadgetFamily.GADGET_I:
        add_gadget_i(b, "", spec.alpha)
    elif f is GadgetFamily.GADGET_S:
        add_gadget_s(b, "")
    elif f is GadgetFamily.GADGET_W:
        add_gadget_w(b, "")
    elif f is GadgetFamily.GADGET_A:
        add_gadget_a(b, "", spec.alpha, spec.k)
    elif f is GadgetFamily.GADGET_D:
        add_gadget_d(b, "", spec.k)
    elif f is GadgetFamily.GADGET_B:
        add_gadget_b(b, "", spec.k)
    elif f is GadgetFamily.LOWER_BOUND_2K1:
        add_lower_bound_2k1(b, "", spec.k)
    elif f is GadgetFamily.LOWER_BOUND_4K:
        add_lower_bound_4k(b, "", spec.k)
    else:
        add_mols_graph(b, "", spec.k, spec.p)
    g = b.build()
    logger.debug("built %s: %d vertices, %d edges", spec, g.vertex_count, g.edge_count)
    return g
