"""
Shared fixtures; puts src/ and the repository root on sys.path like main.py
"""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT))
sys.path.insert(0, str(Path(__file__).resolve().parent))

from graph_core.graph import Graph  # noqa: E402


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


@pytest.fixture
def p3():
    return path_graph(3)


@pytest.fixture
def k2():
    return path_graph(2)


@pytest.fixture
def k4():
    return complete_graph(4)


@pytest.fixture
def triangle_plus_edge():
    return Graph(5, ((0, 1), (1, 2), (2, 0), (3, 4)))


@pytest.fixture
def bowtie():
    return Graph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))
