"""Upper bounds on the Mostar index of split graphs, exact throughout.

A split graph here has clique ``C = {0..k-1}``, independent set
``I = {k..n-1}`` and ``m`` cross edges between them. The chain of bounds,
from tightest to loosest, is

    Mo(G) <= sum_cross (n - d(v) - 1) + sum_{clique pairs} |d(u) - d(u')|
          <= m(n-1) - m^2/(n-k) + sum_{clique pairs} |d(u) - d(u')|
          <= g(n, k, m) = (n + k - 1) m - 2 m^2 / (n-k)
          <= piecewise(n, k) <= 4 n^3 / 27.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Collection, Sequence

from .graph_core import Graph, GraphError, all_pairs_distances, edge_unbalance


class SplitCase(enum.Enum):
    LOW = "LOW"
    HIGH = "HIGH"


def _check_nkm(n: int, k: int, m: int) -> None:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    if not 0 <= m <= k * (n - k):
        raise ValueError(f"cross-edge count {m} outside 0..{k * (n - k)}")


def cross_edge_bound(n: int, dv: int) -> int:
    """Bound on the unbalance of a cross edge whose independent end has degree ``dv``."""
    if not 1 <= dv <= n - 1:
        raise ValueError(f"independent-set degree {dv} outside 1..{n - 1}")
    return n - dv - 1


def clique_pair_unbalance(
    g: Graph, u: int, u2: int, clique: Collection[int], distances=None
) -> int:
    """``|d(u) - d(u2)|`` for two clique vertices, checked against BFS counts."""
    if u not in clique or u2 not in clique:
        raise GraphError(f"({u}, {u2}) are not both clique vertices")
    value = abs(g.degree(u) - g.degree(u2))
    if u != u2:
        bfs = edge_unbalance(g, u, u2, distances).unbalance
        if bfs != value:
            raise RuntimeError(f"clique edge ({u}, {u2}): BFS unbalance {bfs} != degree gap {value}")
    return value


def weighted_absdiff_sum(degseq: Sequence[int]) -> int:
    """``sum_{i<j} (d_i - d_j)`` for a nonincreasing sequence, via position weights."""
    if any(a < b for a, b in zip(degseq, degseq[1:])):
        raise ValueError("degree sequence must be nonincreasing")
    length = len(degseq)
    return sum((length + 1 - 2 * i) * d for i, d in enumerate(degseq, start=1))


def claim3_bound(n: int, k: int, m: int) -> Fraction:
    """``k m - m^2/(n-k)``: cap on the clique-pair degree-gap sum."""
    _check_nkm(n, k, m)
    if m == 0:
        return Fraction(0)
    return k * m - Fraction(m * m, n - k)


@dataclass(frozen=True)
class Claim3Extremal:
    value: int
    r: int
    s: int
    slack: Fraction


def claim3_extremal_value(n: int, k: int, m: int) -> Claim3Extremal:
    """Degree-gap sum of the packed sequence ``(n-k)^r, s, 0, ...``.

    ``slack`` is ``claim3_bound - value``, equal to ``s((n-k)-s)/(n-k)``.
    """
    _check_nkm(n, k, m)
    if k == n:
        return Claim3Extremal(0, 0, 0, Fraction(0))
    width = n - k
    r, s = divmod(m, width)
    value = (k - r) * r * width + (k - 1 - 2 * r) * s
    slack = claim3_bound(n, k, m) - value
    expected = Fraction(s * (width - s), width)
    if slack != expected:
        raise RuntimeError(f"slack {slack} disagrees with s(w-s)/w = {expected}")
    return Claim3Extremal(value, r, s, slack)


def g_bound(n: int, k: int, m: int) -> Fraction:
    _check_nkm(n, k, m)
    if m == 0:
        return Fraction(0)
    return (n + k - 1) * m - Fraction(2 * m * m, n - k)


def m_star(n: int, k: int) -> Fraction:
    """Unconstrained maximiser of ``g(n, k, .)``."""
    return Fraction((n - k) * (n + k - 1), 4)


def cap(n: int) -> Fraction:
    return Fraction(4 * n ** 3, 27)


@dataclass(frozen=True)
class SplitBoundChain:
    n: int
    k: int
    m: int | None
    g_value: Fraction
    piecewise_value: Fraction
    cap_value: Fraction
    case_taken: SplitCase
    m_star: Fraction

    @property
    def ordered(self) -> bool:
        return self.g_value <= self.piecewise_value <= self.cap_value


def theorem2_piecewise(n: int, k: int, m: int | None = None) -> SplitBoundChain:
    """Piecewise bound for clique size ``k``; with ``m`` also evaluates ``g``.

    The low case ``3k <= n - 1`` takes ``g`` at ``m = k(n-k)``, the high case
    takes ``g`` at ``m*``. Without ``m`` the chain's ``g_value`` is the
    piecewise value itself.
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    ms = m_star(n, k)
    if 3 * k <= n - 1:
        case = SplitCase.LOW
        piece = Fraction(k * (n - k) * (n - k - 1))
    else:
        case = SplitCase.HIGH
        piece = Fraction((n - k) * (n + k - 1) ** 2, 8)
    g_value = piece if m is None else g_bound(n, k, m)
    return SplitBoundChain(n, k, m, g_value, piece, cap(n), case, ms)


def scalar_envelope(alpha: Fraction | float):
    """``max(alpha (1-alpha)^2, (1-alpha)(1+alpha)^2 / 8)``; at most 4/27 on [0, 1]."""
    return max(alpha * (1 - alpha) ** 2, (1 - alpha) * (1 + alpha) ** 2 / 8)


# ---------------------------------------------------------------------------
# per-graph audit
# ---------------------------------------------------------------------------


@dataclass
class SplitAudit:
    n: int
    k: int
    m: int
    mostar: int
    edge_decomposition: int
    cauchy_schwarz: Fraction
    cs_slack: Fraction
    clique_gap_sum: int
    claim3: Fraction
    chain: SplitBoundChain
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_split_graph(g: Graph, k: int) -> SplitAudit:
    """Run every inequality of the chain on ``g`` with clique ``0..k-1``.

    Per-edge checks: cross edges against ``cross_edge_bound``, clique edges
    against the exact degree-gap identity. Failures are collected, not raised.
    """
    n = g.n
    clique = range(k)
    for u in clique:
        for v in range(u + 1, k):
            if not g.has_edge(u, v):
                raise GraphError(f"vertices 0..{k - 1} do not form a clique")
    for u, v in g.edges:
        if u >= k and v >= k:
            raise GraphError(f"edge ({u}, {v}) lies inside the independent set")

    dist = all_pairs_distances(g)
    violations = []
    m = 0
    decomposition = 0
    gap_sum = 0
    mo = 0
    for u, v in g.edges:
        eu = edge_unbalance(g, u, v, dist)
        mo += eu.unbalance
        if v >= k:
            m += 1
            bound = cross_edge_bound(n, g.degree(v))
            decomposition += bound
            if eu.unbalance > bound:
                violations.append(f"cross edge ({u},{v}): {eu.unbalance} > {bound}")
        else:
            gap = abs(g.degree(u) - g.degree(v))
            gap_sum += gap
            decomposition += gap
            if eu.unbalance != gap:
                violations.append(f"clique edge ({u},{v}): {eu.unbalance} != {gap}")

    sq = sum(g.degree(v) ** 2 for v in range(k, n))
    cs_term = Fraction(m * m, n - k) if m else Fraction(0)
    cs = m * (n - 1) - cs_term + gap_sum
    c3 = claim3_bound(n, k, m)
    chain = theorem2_piecewise(n, k, m)

    steps = [
        ("Mo <= edge decomposition", mo, decomposition),
        ("edge decomposition <= Cauchy-Schwarz form", decomposition, cs),
        ("clique gap sum <= claim3 bound", gap_sum, c3),
        ("Cauchy-Schwarz form <= g", cs, chain.g_value),
        ("g <= piecewise", chain.g_value, chain.piecewise_value),
        ("piecewise <= 4n^3/27", chain.piecewise_value, chain.cap_value),
    ]
    for label, lhs, rhs in steps:
        if lhs > rhs:
            violations.append(f"{label}: {lhs} > {rhs}")
    return SplitAudit(n, k, m, mo, decomposition, cs, sq - cs_term, gap_sum, c3, chain, violations)
