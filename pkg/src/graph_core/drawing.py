"""
Matplotlib rendering of a graph whose edges are coloured by partition part
"""
import logging
from pathlib import Path
from typing import Optional

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from graph_core.graph import EdgePartition, Graph  # noqa: E402
from graph_core.graph_io import PALETTE  # noqa: E402

logger = logging.getLogger(__name__)


def draw_partition(
    g: Graph,
    partition: Optional[EdgePartition],
    output_path: str,
    seed: int = 0,
    with_labels: bool = True,
) -> str:
    """
    Save a PNG of ``g`` with part i drawn in PALETTE[i % 12]

    Args:
        g: Graph to draw
        partition: Optional colouring; uncoloured edges are black
        output_path: Destination file
        seed: Layout seed (spring layout)
        with_labels: Draw vertex numbers

    Returns:
        Path of the written file
    """
    if partition is not None:
        partition.validate(g)
    nxg = g.to_networkx()
    position = nx.spring_layout(nxg, seed=seed)

    owner = partition.part_of() if partition is not None else {}
    colors = [
        PALETTE[owner[index] % len(PALETTE)] if index in owner else "black"
        for index in range(g.edge_count)
    ]
    edge_list = [g.edges[index] for index in range(g.edge_count)]

    fig, ax = plt.subplots(figsize=(6, 6))
    nx.draw_networkx_nodes(nxg, position, ax=ax, node_size=120, node_color="white", edgecolors="black")
    nx.draw_networkx_edges(nxg, position, ax=ax, edgelist=edge_list, edge_color=colors, width=2.0)
    if with_labels:
        nx.draw_networkx_labels(nxg, position, ax=ax, font_size=7)
    ax.set_axis_off()
    fig.tight_layout()

    path = Path(output_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    logger.info("partition drawing saved to %s", path)
    return str(path)
