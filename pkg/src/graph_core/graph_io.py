"""
Reading and writing graphs and partitions: edge-list, graph6 and DOT
"""
import logging
from typing import List, Optional, Union

import networkx as nx

from graph_core.errors import GraphFormatError, InvalidPartitionError, PreconditionError
from graph_core.graph import EdgePartition, Graph

logger = logging.getLogger(__name__)

GRAPH_FORMATS = ("edge-list", "graph6")
OUTPUT_FORMATS = ("edge-list", "graph6", "dot")

# Part i is drawn with PALETTE[i % 12]
PALETTE = (
    "red", "blue", "green", "orange", "purple", "cyan",
    "magenta", "gold", "brown", "gray", "pink", "navy",
)

GRAPH6_HEADER = b">>graph6<<"


def _as_text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        try:
            return data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise GraphFormatError("input is not ASCII", byte=exc.start) from exc
    return data


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise GraphFormatError(f"{what} {token!r} is not an integer", line=line_no) from None
    if value < 0:
        raise GraphFormatError(f"{what} {value} is negative", line=line_no)
    return value


def _parse_edge_list(text: str) -> Graph:
    lines = [(no, line.strip()) for no, line in enumerate(text.splitlines(), start=1)]
    lines = [(no, line) for no, line in lines if line]
    if not lines:
        raise GraphFormatError("missing header 'n m'", line=1)

    header_no, header = lines[0]
    tokens = header.split()
    if len(tokens) != 2:
        raise GraphFormatError("header must be 'n m'", line=header_no)
    n = _parse_int(tokens[0], header_no, "vertex count")
    m = _parse_int(tokens[1], header_no, "edge count")

    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] + 1 if body else header_no + 1)
        raise GraphFormatError(f"header announces {m} edges but {len(body)} edge lines follow", line=where)

    edges = []
    seen = {}
    for line_no, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError("edge line must be 'u v'", line=line_no)
        u = _parse_int(tokens[0], line_no, "endpoint")
        v = _parse_int(tokens[1], line_no, "endpoint")
        if u >= n or v >= n:
            raise GraphFormatError(f"endpoint out of range for {n} vertices", line=line_no)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", line=line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(f"duplicate edge {u} {v} (first on line {seen[key]})", line=line_no)
        seen[key] = line_no
        edges.append((u, v))
    return Graph(n, tuple(edges))


def _parse_graph6(text: str) -> Graph:
    data = text.strip().encode("ascii")
    offset = 0
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not data:
        raise GraphFormatError("empty graph6 string", byte=offset)
    for position, value in enumerate(data):
        if not 63 <= value <= 126:
            raise GraphFormatError(f"byte {value} outside the graph6 range 63..126", byte=offset + position)
    try:
        nxg = nx.from_graph6_bytes(data)
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise GraphFormatError(f"malformed graph6 data: {exc}", byte=offset) from exc

    n = nxg.number_of_nodes()
    # Row-major over the upper triangle of the adjacency matrix
    edges = sorted((min(u, v), max(u, v)) for u, v in nxg.edges())
    return Graph(n, tuple(edges))


def parse_graph(data: Union[bytes, str], format: str = "edge-list") -> Graph:
    """
    Parse a graph from text

    Args:
        data: Raw file contents
        format: "edge-list" or "graph6"

    Returns:
        Parsed Graph
    """
    if format not in GRAPH_FORMATS:
        raise PreconditionError(f"unknown graph format {format!r}; expected one of {GRAPH_FORMATS}")
    text = _as_text(data)
    graph = _parse_edge_list(text) if format == "edge-list" else _parse_graph6(text)
    logger.debug("parsed %s graph with %d vertices and %d edges", format, graph.vertex_count, graph.edge_count)
    return graph


def _dot(g: Graph, coloring: Optional[EdgePartition]) -> str:
    owner = coloring.part_of() if coloring is not None else {}
    lines = ["graph G {"]
    for v in range(g.vertex_count):
        if g.labels and v in g.labels:
            lines.append(f'  {v} [label="{g.labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for index, (u, v) in enumerate(g.edges):
        if index in owner:
            part = owner[index]
            lines.append(f'  {u} -- {v} [color="{PALETTE[part % len(PALETTE)]}", part={part}];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def serialize_graph(g: Graph, format: str = "edge-list", coloring: Optional[EdgePartition] = None) -> bytes:
    """
    Serialize a graph, optionally coloured by a partition (DOT only)

    Args:
        g: Graph to write
        format: "edge-list", "graph6" or "dot"
        coloring: Partition whose part index picks each edge's colour

    Returns:
        Encoded bytes without a trailing newline
    """
    if format not in OUTPUT_FORMATS:
        raise PreconditionError(f"unknown output format {format!r}; expected one of {OUTPUT_FORMATS}")
    if coloring is not None:
        issues = coloring.problems(g)
        if issues:
            raise InvalidPartitionError("colouring does not fit the graph: " + "; ".join(issues))

    if format == "edge-list":
        lines = [f"{g.vertex_count} {g.edge_count}"]
        lines.extend(f"{u} {v}" for u, v in g.edges)
        return "\n".join(lines).encode("ascii")
    if format == "graph6":
        nxg = g.to_networkx()
        return nx.to_graph6_bytes(nxg, nodes=list(range(g.vertex_count)), header=False).rstrip(b"\n")
    return _dot(g, coloring).encode("ascii")


def format_partition(g: Graph, partition: EdgePartition) -> str:
    """One line per part: 'part i: u-v u-v ...' with edges in index order"""
    lines = []
    for i, part in enumerate(partition.parts):
        pairs = " ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in sorted(part))
        lines.append(f"part {i}: {pairs}")
    return "\n".join(lines)


def parse_partition(data: Union[bytes, str], g: Graph) -> EdgePartition:
    """Inverse of format_partition; edges are resolved against ``g``"""
    text = _as_text(data)
    parts: List[frozenset] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep or not head.startswith("part"):
            raise GraphFormatError("expected 'part i: u-v ...'", line=line_no)
        edges = set()
        for token in body.split():
            ends = token.split("-")
            if len(ends) != 2:
                raise GraphFormatError(f"bad edge token {token!r}", line=line_no)
            u = _parse_int(ends[0], line_no, "endpoint")
            v = _parse_int(ends[1], line_no, "endpoint")
            if not g.has_edge(u, v):
                raise GraphFormatError(f"{u}-{v} is not an edge of the graph", line=line_no)
            edges.add(g.edge_index(u, v))
        parts.append(frozenset(edges))
    return EdgePartition(tuple(parts))
