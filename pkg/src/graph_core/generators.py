"""
Seeded random graph generators for property tests and the CLI
"""
import random
from typing import List, Optional, Tuple

import networkx as nx

from graph_core.errors import ParameterError
from graph_core.graph import Graph


def random_tree(n: int, seed: Optional[int] = None) -> Graph:
    """
    Uniform random labelled tree on n vertices via a Prüfer sequence

    Args:
        n: Number of vertices (at least 2)
        seed: Random seed

    Returns:
        Tree with n - 1 edges
    """
    if n < 2:
        raise ParameterError("a random tree needs at least 2 vertices")
    rng = random.Random(seed)
    if n == 2:
        return Graph(2, ((0, 1),))
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph.from_networkx(nx.from_prufer_sequence(sequence))


def random_connected_graph(
    n: int,
    m: int,
    seed: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> Graph:
    """
    Random connected graph: a random spanning tree plus extra random edges

    The result has at most m edges; fewer when the degree cap leaves no
    room for more.
    """
    if n < 2 or m < n - 1:
        raise ParameterError(f"cannot build a connected graph with n={n}, m={m}")
    rng = random.Random(seed)

    for _ in range(50):
        tree = random_tree(n, rng.randrange(2**31))
        if max_degree is None or tree.max_degree <= max_degree:
            break
    else:
        raise ParameterError(f"no spanning tree with max degree {max_degree} found for n={n}")

    edges = set((min(u, v), max(u, v)) for u, v in tree.edges)
    degree = [0] * n
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1

    candidates = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(candidates)
    for u, v in candidates:
        if len(edges) >= m:
            break
        if max_degree is not None and (degree[u] >= max_degree or degree[v] >= max_degree):
            continue
        edges.add((u, v))
        degree[u] += 1
        degree[v] += 1
    return Graph(n, tuple(sorted(edges)))


def random_k_irregular_instance(k: int, hubs: int, seed: Optional[int] = None) -> Graph:
    """
    Random connected graph with maximum degree k + 1 in which hubs (degree
    k + 1) are never adjacent, non-hubs are never adjacent, and every
    neighbour of a hub has degree 1 or 2

    Hubs are tied together through degree-2 connector vertices; free hub
    slots are filled with leaves. Every edge has exactly one hub end, so the
    graph has hubs * (k + 1) edges.
    """
    if k < 1 or hubs < 1:
        raise ParameterError("k and hubs must be positive")
    rng = random.Random(seed)
    slots = [k + 1] * hubs
    links: List[Tuple[int, int]] = []

    # Spanning structure first so the graph is connected
    for hub in range(1, hubs):
        open_hubs = [h for h in range(hub) if slots[h] > 0]
        if not open_hubs:
            raise ParameterError(f"k={k} leaves no room to connect {hubs} hubs")
        other = rng.choice(open_hubs)
        links.append((other, hub))
        slots[other] -= 1
        slots[hub] -= 1

    extra = rng.randint(0, hubs)
    for _ in range(extra):
        open_hubs = [h for h in range(hubs) if slots[h] > 0]
        if len(open_hubs) < 2:
            break
        a, b = rng.sample(open_hubs, 2)
        links.append((a, b))
        slots[a] -= 1
        slots[b] -= 1

    edges = []
    next_vertex = hubs
    for a, b in links:
        edges.append((a, next_vertex))
        edges.append((b, next_vertex))
        next_vertex += 1
    for hub in range(hubs):
        for _ in range(slots[hub]):
            edges.append((hub, next_vertex))
            next_vertex += 1
    return Graph(next_vertex, tuple(edges))
