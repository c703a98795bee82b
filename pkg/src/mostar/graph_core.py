"""Simple undirected graphs, BFS distances and the Mostar index.

For an edge ``uv`` the count ``n(u, v)`` is the number of vertices strictly
closer to ``u`` than to ``v``; each endpoint counts itself. Disconnected
graphs are allowed: unreachable vertices sit at distance ``UNREACHABLE``
(positive infinity), and two infinite distances tie.
"""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

UNREACHABLE = math.inf
# above this order mostar_index switches to the vectorised distance matrix
DENSE_THRESHOLD = 40

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph data (bad vertex ids, self-loops, missing edges)."""


class GraphFormatError(GraphError):
    """Malformed edge-list text; carries the 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``; ``edges``
    holds each edge once as ``(u, v)`` with ``u < v``, sorted.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.adjacency[u]

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of 0..n-1")
        return from_edge_list(self.n, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass(frozen=True)
class DistanceVector:
    source: int
    distances: tuple[float, ...]

    def __getitem__(self, v: int) -> float:
        return self.distances[v]


@dataclass(frozen=True)
class EdgeUnbalance:
    edge: Edge
    n_uv: int
    n_vu: int
    equidistant: int

    @property
    def unbalance(self) -> int:
        return abs(self.n_uv - self.n_vu)


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from vertex pairs; duplicates collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"order must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex id outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    adjacency = tuple(tuple(sorted(s)) for s in nbrs)
    edges = tuple((u, v) for u in range(n) for v in adjacency[u] if u < v)
    return Graph(n, adjacency, edges)


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def bfs_distances(g: Graph, src: int) -> DistanceVector:
    if not 0 <= src < g.n:
        raise GraphError(f"source {src} outside 0..{g.n - 1}")
    dist: list[float] = [UNREACHABLE] * g.n
    dist[src] = 0
    queue = deque([src])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return DistanceVector(src, tuple(dist))


def all_pairs_distances(g: Graph) -> list[tuple[float, ...]]:
    return [bfs_distances(g, v).distances for v in range(g.n)]


def _count_sides(du: Sequence[float], dv: Sequence[float]) -> tuple[int, int, int]:
    closer_u = closer_v = 0
    for a, b in zip(du, dv):
        if a < b:
            closer_u += 1
        elif b < a:
            closer_v += 1
    return closer_u, closer_v, len(du) - closer_u - closer_v


def edge_unbalance(
    g: Graph, u: int, v: int, distances: Sequence[Sequence[float]] | None = None
) -> EdgeUnbalance:
    """Counts of vertices closer to ``u``, closer to ``v``, and tied.

    ``distances`` may carry a precomputed all-pairs table to avoid repeated BFS.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if distances is None:
        du, dv = bfs_distances(g, u).distances, bfs_distances(g, v).distances
    else:
        du, dv = distances[u], distances[v]
    n_uv, n_vu, eq = _count_sides(du, dv)
    return EdgeUnbalance((u, v), n_uv, n_vu, eq)


def edge_unbalances(g: Graph) -> list[EdgeUnbalance]:
    """Per-edge unbalance for every edge, in ``g.edges`` order."""
    dist = all_pairs_distances(g)
    return [edge_unbalance(g, u, v, dist) for u, v in g.edges]


def distance_matrix(g: Graph) -> np.ndarray:
    """All-pairs distances as a float array, ``inf`` where unreachable.

    Level-synchronous BFS from every source at once; one matrix product per level.
    """
    n = g.n
    adj = np.zeros((n, n))
    if g.edges:
        e = np.array(g.edges)
        adj[e[:, 0], e[:, 1]] = 1
        adj[e[:, 1], e[:, 0]] = 1
    dist = np.full((n, n), np.inf)
    np.fill_diagonal(dist, 0)
    frontier = np.eye(n)
    visited = np.eye(n, dtype=bool)
    level = 0
    while True:
        level += 1
        nxt = (frontier @ adj > 0) & ~visited
        if not nxt.any():
            return dist
        dist[nxt] = level
        visited |= nxt
        frontier = nxt.astype(float)


def _mostar_dense(g: Graph) -> int:
    dist = distance_matrix(g)
    edges = np.array(g.edges)
    total = 0
    for start in range(0, len(edges), 2048):
        chunk = edges[start:start + 2048]
        du, dv = dist[chunk[:, 0]], dist[chunk[:, 1]]
        diff = (du < dv).sum(axis=1) - (dv < du).sum(axis=1)
        total += int(np.abs(diff).sum())
    return total


def mostar_index(g: Graph, method: str = "auto") -> int:
    """Exact Mostar index.

    ``method`` is ``"bfs"`` (per-source Python BFS), ``"dense"`` (numpy
    distance matrix) or ``"auto"`` (dense above ``DENSE_THRESHOLD`` vertices).
    """
    if not g.edges:
        return 0
    if method == "dense" or (method == "auto" and g.n > DENSE_THRESHOLD):
        return _mostar_dense(g)
    if method not in ("auto", "bfs"):
        raise ValueError(f"unknown method {method!r}")
    dist = all_pairs_distances(g)
    total = 0
    for u, v in g.edges:
        a, b, _ = _count_sides(dist[u], dist[v])
        total += abs(a - b)
    return total


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return UNREACHABLE not in bfs_distances(g, 0).distances


def _check_coloring(g: Graph, side_a: frozenset[int], side_b: frozenset[int]) -> None:
    if side_a & side_b or (side_a | side_b) != frozenset(range(g.n)):
        raise GraphError("coloring must partition the vertex set")
    for u, v in g.edges:
        if (u in side_a) == (v in side_a):
            raise GraphError(f"edge ({u}, {v}) lies inside one side of the coloring")


def bipartition(
    g: Graph, override: tuple[Iterable[int], Iterable[int]] | None = None
) -> tuple[frozenset[int], frozenset[int]] | None:
    """Proper two-colouring ``(side_a, side_b)`` or ``None`` if an odd cycle exists.

    Each component's smallest vertex goes to side A, except that isolated
    vertices go to side B. An explicit ``override`` is validated and returned.
    """
    if override is not None:
        side_a, side_b = frozenset(override[0]), frozenset(override[1])
        _check_coloring(g, side_a, side_b)
        return side_a, side_b

    color: list[int | None] = [None] * g.n
    for root in range(g.n):
        if color[root] is not None:
            continue
        color[root] = 0 if g.adjacency[root] else 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] is None:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    side_a = frozenset(v for v in range(g.n) if color[v] == 0)
    side_b = frozenset(v for v in range(g.n) if color[v] == 1)
    return side_a, side_b


def degree_sequence(g: Graph) -> list[int]:
    return sorted((len(a) for a in g.adjacency), reverse=True)


# ---------------------------------------------------------------------------
# edge-list text format:  "n m" header, then m lines "u v"; '#' starts a comment
# ---------------------------------------------------------------------------

_COMMENT = re.compile(r"#.*")


def parse_edge_list(text: str) -> Graph:
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = _COMMENT.sub("", raw).split()
        if fields:
            rows.append((lineno, fields))
    if not rows:
        raise GraphFormatError("missing 'n m' header")

    def ints(lineno: int, fields: list[str]) -> tuple[int, int]:
        if len(fields) != 2:
            raise GraphFormatError(f"expected two integers, got {len(fields)} fields", lineno)
        try:
            return int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphFormatError(f"non-integer field in {' '.join(fields)!r}", lineno) from None

    head_line, head = rows[0]
    n, m = ints(head_line, head)
    if n < 0 or m < 0:
        raise GraphFormatError("n and m must be nonnegative", head_line)
    body = rows[1:]
    if len(body) != m:
        last = body[-1][0] if body else head_line
        raise GraphFormatError(f"header declares {m} edges but {len(body)} follow", last)
    pairs = []
    for lineno, fields in body:
        u, v = ints(lineno, fields)
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise GraphFormatError(f"invalid edge ({u}, {v}) for n={n}", lineno)
        pairs.append((u, v))
    return from_edge_list(n, pairs)


def format_edge_list(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
