import math
import sys

import networkx as nx

from mostar.graph_core import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_mostar(g: Graph) -> int:
    """Independent Mostar index: networkx distances, infinity for unreachable pairs."""
    h = to_nx(g)
    dist = dict(nx.all_pairs_shortest_path_length(h))
    total = 0
    for u, v in h.edges:
        du = [dist[u].get(w, math.inf) for w in h]
        dv = [dist[v].get(w, math.inf) for w in h]
        total += abs(sum(a < b for a, b in zip(du, dv)) - sum(b < a for a, b in zip(du, dv)))
    return total


def pytest_terminal_summary(terminalreporter):
    lines = getattr(sys.modules.get("test_acceptance"), "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
