"""Extremal families: complete bipartite graphs and split graphs.

Vertex numbering is fixed: side A (or the clique) comes first, then side B
(or the independent set).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph_core import Graph, GraphError, from_edge_list

ALPHA1 = (1 - 1 / math.sqrt(3)) / 2


@dataclass(frozen=True)
class SplitSpec:
    """A split graph: clique ``0..k-1``, independent set ``k..n-1``.

    ``cross_degrees[c]`` is the number of independent-set neighbours of clique
    vertex ``c``. ``assignment`` names the rule that picks those neighbours;
    only ``"round-robin"`` is implemented.
    """

    n: int
    k: int
    cross_degrees: tuple[int, ...]
    assignment: str = "round-robin"

    def __post_init__(self):
        n, k, degs = self.n, self.k, self.cross_degrees
        if not 0 <= k <= n:
            raise GraphError(f"clique size {k} outside 0..{n}")
        if len(degs) != k:
            raise GraphError(f"need {k} cross-degrees, got {len(degs)}")
        if any(d < 0 or d > n - k for d in degs):
            raise GraphError(f"cross-degrees {list(degs)} must lie in 0..{n - k}")
        if any(a < b for a, b in zip(degs, degs[1:])):
            raise GraphError(f"cross-degrees {list(degs)} must be nonincreasing")
        if self.assignment != "round-robin":
            raise GraphError(f"unknown assignment rule {self.assignment!r}")

    @property
    def m(self) -> int:
        return sum(self.cross_degrees)

    @property
    def r(self) -> int:
        """Number of clique vertices adjacent to the whole independent set."""
        return sum(1 for d in self.cross_degrees if d == self.n - self.k) if self.n > self.k else 0

    @property
    def s(self) -> int:
        """Cross-degree of the first partially joined clique vertex (0 if none)."""
        if self.n == self.k:
            return 0
        return self.m - self.r * (self.n - self.k)


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 0 or b < 0:
        raise GraphError("side sizes must be nonnegative")
    return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def mo_complete_bipartite(a: int, b: int) -> int:
    # each of the a*b edges splits the graph into a vs b closer vertices
    return a * b * abs(a - b)


def split_join(k: int, n: int) -> Graph:
    """The complete split graph: a k-clique joined to n-k independent vertices."""
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got k={k}, n={n}")
    clique = [(u, v) for u in range(k) for v in range(u + 1, k)]
    cross = [(u, v) for u in range(k) for v in range(k, n)]
    return from_edge_list(n, clique + cross)


def mo_split_join(k: int, n: int) -> int:
    return k * (n - k) * max(n - k - 1, 0)


def split_from_spec(spec: SplitSpec) -> Graph:
    """Realise ``spec`` by handing out independent-set neighbours round-robin.

    A cursor walks the independent set in id order and keeps going where the
    previous clique vertex stopped, so independent-set degrees differ by at
    most one.
    """
    n, k = spec.n, spec.k
    width = n - k
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    cursor = 0
    for c, d in enumerate(spec.cross_degrees):
        for t in range(d):
            pairs.append((c, k + (cursor + t) % width))
        if width:
            cursor = (cursor + d) % width
    return from_edge_list(n, pairs)


def extremal_split(n: int, k: int, m: int) -> tuple[SplitSpec, Graph]:
    """Split graph with ``m`` cross edges packed onto as few clique vertices as possible.

    ``r = m // (n-k)`` clique vertices see the whole independent set, one more
    sees ``s = m - r(n-k)`` of it, the rest see none of it.
    """
    if not 0 <= k <= n:
        raise GraphError(f"need 0 <= k <= n, got k={k}, n={n}")
    width = n - k
    if not 0 <= m <= k * width:
        raise GraphError(f"cross-edge count {m} outside 0..{k * width}")
    if width == 0:
        degs = (0,) * k
    else:
        r, s = divmod(m, width)
        degs = (width,) * r + ((s,) if r < k else ()) + (0,) * max(k - r - 1, 0)
    spec = SplitSpec(n, k, degs)
    return spec, split_from_spec(spec)


def best_complete_bipartite(n: int) -> tuple[int, int]:
    """Smallest ``a`` in ``1..n//2`` maximising ``a(n-a)(n-2a)``, with that value."""
    if n < 2:
        raise ValueError("need n >= 2")
    best = max(range(1, n // 2 + 1), key=lambda a: (a * (n - a) * (n - 2 * a), -a))
    return best, best * (n - best) * (n - 2 * best)
