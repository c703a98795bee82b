"""Exact tools for upper bounds on the Mostar index of bipartite and split graphs."""

from .graph_core import (
    UNREACHABLE,
    Graph,
    GraphError,
    bfs_distances,
    bipartition,
    degree_sequence,
    edge_unbalance,
    from_edge_list,
    mostar_index,
)

__all__ = [
    "UNREACHABLE",
    "Graph",
    "GraphError",
    "bfs_distances",
    "bipartition",
    "degree_sequence",
    "edge_unbalance",
    "from_edge_list",
    "mostar_index",
]
