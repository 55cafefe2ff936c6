"""
Name-based graph assembly with vertex identification
"""
from typing import Dict, Iterable, List, Sequence, Tuple

from networkx.utils import UnionFind

from graph_core.errors import PreconditionError
from graph_core.graph import Graph


class GadgetBuilder:
    """
    Accumulates named vertices and edges, then compacts them into a Graph

    Vertices are numbered in creation order. Identified vertices collapse
    onto the earliest created member of their group and keep every name,
    joined with "=", as their label.
    """

    def __init__(self):
        self._order: List[str] = []
        self._position: Dict[str, int] = {}
        self._edges: Dict[frozenset, Tuple[str, str]] = {}
        self._merged = UnionFind()

    def vertex(self, name: str) -> str:
        if "=" in name:
            raise PreconditionError(f"vertex name {name!r} may not contain '='")
        if name not in self._position:
            self._position[name] = len(self._order)
            self._order.append(name)
            self._merged[name]
        return name

    def vertices(self, names: Iterable[str]) -> List[str]:
        return [self.vertex(n) for n in names]

    def edge(self, a: str, b: str) -> None:
        self.vertex(a)
        self.vertex(b)
        key = frozenset((a, b))
        if len(key) == 1 or key in self._edges:
            raise PreconditionError(f"edge {a}-{b} is a loop or already present")
        self._edges[key] = (a, b)

    def star(self, center: str, leaves: Sequence[str]) -> None:
        for leaf in leaves:
            self.edge(center, leaf)

    def path(self, names: Sequence[str]) -> None:
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def cycle(self, names: Sequence[str]) -> None:
        self.path(names)
        self.edge(names[-1], names[0])

    def complete(self, names: Sequence[str]) -> None:
        for i, a in enumerate(names):
            for b in names[i + 1:]:
                self.edge(a, b)

    def complete_bipartite(self, left: Sequence[str], right: Sequence[str]) -> None:
        for a in left:
            for b in right:
                self.edge(a, b)

    def remove_edge(self, a: str, b: str) -> None:
        key = frozenset((a, b))
        if key not in self._edges:
            raise PreconditionError(f"no edge {a}-{b} to remove")
        del self._edges[key]

    def identify(self, a: str, b: str) -> None:
        self.vertex(a)
        self.vertex(b)
        self._merged.union(a, b)

    def has_vertex(self, name: str) -> bool:
        return name in self._position

    def build(self) -> Graph:
        """Compact identified vertices and return the graph with provenance labels"""
        groups: Dict[str, List[str]] = {}
        for name in self._order:
            groups.setdefault(self._merged[name], []).append(name)
        ordered = sorted(groups.values(), key=lambda members: self._position[members[0]])

        index = {}
        labels = {}
        for number, members in enumerate(ordered):
            labels[number] = "=".join(members)
            for name in members:
                index[name] = number

        edges = tuple((index[a], index[b]) for a, b in self._edges.values())
        return Graph(len(ordered), edges, labels)
