"""
Core graph model: simple undirected graphs, edge subsets and edge partitions
"""
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
import numpy as np
from networkx.utils import UnionFind

from graph_core.errors import InvalidPartitionError, InvalidSubsetError, PreconditionError

Edge = Tuple[int, int]
EdgeSubset = FrozenSet[int]


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph on vertices 0..vertex_count-1

    Edges keep the order they were given in; every algorithm refers to an
    edge by its position in ``edges``. Labels are provenance metadata only.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]
    labels: Optional[Mapping[int, str]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise PreconditionError("vertex_count must be nonnegative")
        normalized = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", normalized)

        seen = set()
        for position, (u, v) in enumerate(normalized):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise PreconditionError(f"edge {position} ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise PreconditionError(f"edge {position} is a self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise PreconditionError(f"edge {position} ({u}, {v}) is a duplicate")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> EdgeSubset:
        return frozenset(range(len(self.edges)))

    @cached_property
    def degrees(self) -> np.ndarray:
        """Degree of every vertex as an integer vector"""
        if not self.edges:
            return np.zeros(self.vertex_count, dtype=np.int64)
        flat = np.asarray(self.edges, dtype=np.int64).ravel()
        return np.bincount(flat, minlength=self.vertex_count)

    @property
    def max_degree(self) -> int:
        return int(self.degrees.max()) if self.vertex_count else 0

    def degree(self, v: int) -> int:
        return int(self.degrees[v])

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Incident edge indices per vertex, in edge order"""
        buckets: List[List[int]] = [[] for _ in range(self.vertex_count)]
        for index, (u, v) in enumerate(self.edges):
            buckets[u].append(index)
            buckets[v].append(index)
        return tuple(tuple(b) for b in buckets)

    @cached_property
    def edge_lookup(self) -> Dict[Edge, int]:
        lookup = {}
        for index, (u, v) in enumerate(self.edges):
            lookup[(u, v)] = index
            lookup[(v, u)] = index
        return lookup

    def edge_index(self, u: int, v: int) -> int:
        return self.edge_lookup[(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_lookup

    def other_end(self, edge: int, v: int) -> int:
        a, b = self.edges[edge]
        return b if a == v else a

    def neighbors(self, v: int) -> List[int]:
        return [self.other_end(e, v) for e in self.incidence[v]]

    @cached_property
    def label_index(self) -> Dict[str, int]:
        index = {}
        for vertex, text in (self.labels or {}).items():
            for name in text.split("="):
                index[name] = vertex
        return index

    def vertex_named(self, name: str) -> int:
        """Vertex carrying ``name`` among its (possibly merged) labels"""
        try:
            return self.label_index[name]
        except KeyError:
            raise KeyError(f"no vertex labelled {name!r}") from None

    def label(self, v: int) -> str:
        return (self.labels or {}).get(v, str(v))

    def to_networkx(self, subset: Optional[Iterable[int]] = None) -> nx.Graph:
        """
        Convert to networkx, keeping edge positions in the ``index`` attribute

        Args:
            subset: Edge indices to keep (all edges when omitted); vertices
                    are always the full range so indices stay aligned

        Returns:
            networkx Graph
        """
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.vertex_count))
        indices = range(len(self.edges)) if subset is None else sorted(subset)
        for index in indices:
            u, v = self.edges[index]
            nxg.add_edge(u, v, index=index)
        return nxg

    @classmethod
    def from_networkx(cls, nxg: nx.Graph) -> "Graph":
        """Build a Graph from a networkx graph whose nodes are 0..n-1"""
        n = nxg.number_of_nodes()
        if set(nxg.nodes) != set(range(n)):
            nxg = nx.convert_node_labels_to_integers(nxg, ordering="sorted")
        edges = sorted((min(u, v), max(u, v)) for u, v in nxg.edges())
        return cls(n, tuple(edges))

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return nx.is_connected(self.to_networkx())

    def is_tree(self) -> bool:
        return self.vertex_count >= 1 and self.edge_count == self.vertex_count - 1 and self.is_connected()

    def is_bipartite(self) -> bool:
        return nx.is_bipartite(self.to_networkx())

    def degree_set(self) -> FrozenSet[int]:
        return frozenset(int(d) for d in self.degrees)

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """
        Subgraph induced on a vertex set, renumbered in increasing order

        Returns:
            Tuple of (subgraph, list mapping subgraph edge index -> edge index here)
        """
        chosen = sorted(set(vertices))
        position = {v: i for i, v in enumerate(chosen)}
        edges = []
        edge_map = []
        for index, (u, v) in enumerate(self.edges):
            if u in position and v in position:
                edges.append((position[u], position[v]))
                edge_map.append(index)
        labels = {position[v]: self.labels[v] for v in chosen if self.labels and v in self.labels}
        return Graph(len(chosen), tuple(edges), labels or None), edge_map


def check_subset(g: Graph, s: Iterable[int]) -> EdgeSubset:
    """Validate edge indices against ``g`` and freeze them"""
    subset = frozenset(s)
    bad = [e for e in subset if not (0 <= e < g.edge_count)]
    if bad:
        raise InvalidSubsetError(f"edge indices {sorted(bad)} not in graph with {g.edge_count} edges")
    return subset


@dataclass(frozen=True)
class EdgePartition:
    """Ordered sequence of disjoint nonempty edge subsets covering E(G)"""

    parts: Tuple[EdgeSubset, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(frozenset(p) for p in self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def problems(self, g: Graph) -> List[str]:
        """Every way in which this partition fails to partition E(g)"""
        issues = []
        covered = set()
        for i, part in enumerate(self.parts):
            if not part:
                issues.append(f"part {i} is empty")
            bad = [e for e in part if not (0 <= e < g.edge_count)]
            if bad:
                issues.append(f"part {i} has invalid edge indices {sorted(bad)}")
            overlap = covered & part
            if overlap:
                issues.append(f"part {i} repeats edges {sorted(overlap)}")
            covered |= part
        missing = set(range(g.edge_count)) - covered
        if missing:
            issues.append(f"edges {sorted(missing)} are not covered")
        return issues

    def is_valid_for(self, g: Graph) -> bool:
        return not self.problems(g)

    def validate(self, g: Graph) -> None:
        issues = self.problems(g)
        if issues:
            raise InvalidPartitionError("; ".join(issues))

    def part_of(self) -> Dict[int, int]:
        """Map edge index -> part index"""
        return {e: i for i, part in enumerate(self.parts) for e in part}

    @classmethod
    def from_assignment(cls, assignment: Sequence[int], drop_empty: bool = True) -> "EdgePartition":
        """Group edge indices by the part number assigned to them"""
        count = max(assignment) + 1 if assignment else 0
        buckets: List[set] = [set() for _ in range(count)]
        for edge, part in enumerate(assignment):
            buckets[part].add(edge)
        if drop_empty:
            buckets = [b for b in buckets if b]
        return cls(tuple(frozenset(b) for b in buckets))

    def canonical(self) -> "EdgePartition":
        """Same parts ordered by their smallest edge index"""
        return EdgePartition(tuple(sorted(self.parts, key=lambda p: min(p) if p else -1)))


def degree_profile(g: Graph, s: Iterable[int]) -> Dict[int, int]:
    """
    Degrees inside the edge-induced subgraph of ``s``

    Args:
        g: Host graph
        s: Edge indices

    Returns:
        Mapping vertex -> degree, for vertices touched by ``s`` only
    """
    subset = check_subset(g, s)
    profile: Dict[int, int] = {}
    for e in subset:
        u, v = g.edges[e]
        profile[u] = profile.get(u, 0) + 1
        profile[v] = profile.get(v, 0) + 1
    return profile


def components(g: Graph, s: Iterable[int]) -> List[EdgeSubset]:
    """
    Connected components of the edge-induced subgraph of ``s``

    Components come out ordered by their smallest edge index.
    """
    subset = check_subset(g, s)
    groups = UnionFind()
    for e in subset:
        u, v = g.edges[e]
        groups.union(u, v)

    by_root: Dict[int, set] = {}
    for e in sorted(subset):
        root = groups[g.edges[e][0]]
        by_root.setdefault(root, set()).add(e)
    return [frozenset(part) for part in by_root.values()]
