"""Exhaustive search over small bipartite and split graphs, plus gap tables.

Bipartite graphs with sides ``a <= b`` are enumerated as ``a x b``
biadjacency matrices, stored as one bitmask per side-A vertex. Split graphs
with clique size ``k`` are enumerated by their ``k x (n-k)`` cross matrices.
Rows are kept in nondecreasing order (a relabelling of side A or of the
clique), and for ``a == b`` a matrix is also kept only if it does not exceed
the row-sorted form of its transpose. Both prunings are sound because the
Mostar index and every bound checked here are invariant under relabelling.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Callable, Iterator

from .duality import THEOREM1_CONSTANT, certified_bound, theorem1_check
from .families import (
    best_complete_bipartite,
    complete_bipartite,
    extremal_split,
    mo_split_join,
)
from .graph_core import Graph, from_edge_list, is_connected, mostar_index
from .lp_relaxation import relaxation_bound
from .split_bounds import audit_split_graph, g_bound, m_star, theorem2_piecewise

MAX_CELLS = 30

Rows = tuple[int, ...]
Visitor = Callable[[Graph, Rows], None]


class CapacityError(ValueError):
    """The requested search space exceeds the configured guard."""

    def __init__(self, message: str, size: int):
        self.size = size
        super().__init__(message)


def _guard(cells: int, max_cells: int | None, what: str) -> None:
    if max_cells is not None and cells > max_cells:
        raise CapacityError(
            f"{what} has {cells} matrix cells (2^{cells} raw matrices); limit is {max_cells}",
            2 ** cells,
        )


def transpose_rows(rows: Rows, width: int) -> Rows:
    """Row bitmasks of the transposed matrix (column ``t`` becomes row ``t``)."""
    return tuple(sum(1 << u for u, r in enumerate(rows) if r >> t & 1) for t in range(width))


def iter_row_matrices(
    height: int,
    width: int,
    *,
    prune: bool = True,
    transpose_prune: bool = False,
    shard: tuple[int, int] | None = None,
) -> Iterator[Rows]:
    """Yield row-bitmask matrices in lexicographic order.

    ``shard=(index, count)`` keeps only matrices whose first row is congruent
    to ``index`` modulo ``count``.
    """
    values = range(1 << width)
    source = combinations_with_replacement(values, height) if prune else product(values, repeat=height)
    for rows in source:
        if shard is not None and (rows[0] if height else 0) % shard[1] != shard[0]:
            continue
        if transpose_prune and rows > tuple(sorted(transpose_rows(rows, width))):
            continue
        yield rows


def bipartite_from_rows(a: int, b: int, rows: Rows) -> Graph:
    return from_edge_list(a + b, [(u, a + t) for u, r in enumerate(rows) for t in range(b) if r >> t & 1])


def split_from_rows(n: int, k: int, rows: Rows) -> Graph:
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    pairs += [(u, k + t) for u, r in enumerate(rows) for t in range(n - k) if r >> t & 1]
    return from_edge_list(n, pairs)


def enumerate_bipartite(
    a: int,
    b: int,
    visitor: Visitor,
    *,
    prune: bool = True,
    shard: tuple[int, int] | None = None,
    max_cells: int | None = MAX_CELLS,
) -> int:
    """Visit every (pruned) ``a x b`` biadjacency matrix; return the count visited."""
    if a > b:
        raise ValueError(f"need a <= b, got a={a}, b={b}")
    _guard(a * b, max_cells, f"K_{{{a},{b}}} search")
    count = 0
    for rows in iter_row_matrices(a, b, prune=prune, transpose_prune=prune and a == b, shard=shard):
        visitor(bipartite_from_rows(a, b, rows), rows)
        count += 1
    return count


def enumerate_split(
    n: int,
    k: int,
    visitor: Visitor,
    *,
    prune: bool = True,
    shard: tuple[int, int] | None = None,
    max_cells: int | None = MAX_CELLS,
) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    _guard(k * (n - k), max_cells, f"split(n={n}, k={k}) search")
    count = 0
    for rows in iter_row_matrices(k, n - k, prune=prune, shard=shard):
        visitor(split_from_rows(n, k, rows), rows)
        count += 1
    return count


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass
class SearchReport:
    graph_class: str
    n: int
    instances: int
    max_value: int
    maximizer: Graph
    maximizer_params: dict
    max_connected: int | None
    maximizer_connected: Graph | None
    bounds: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and all(self.checks.values())


@dataclass
class _Best:
    """Running maximum; ties keep the smallest ``(side or clique size, rows)`` key."""

    value: int = -1
    key: tuple = ()
    value_conn: int = -1
    key_conn: tuple = ()
    count: int = 0
    violations: list = field(default_factory=list)

    def offer(self, mo: int, key: tuple, connected: bool) -> None:
        if mo > self.value or (mo == self.value and key < self.key):
            self.value, self.key = mo, key
        if connected and (mo > self.value_conn or (mo == self.value_conn and key < self.key_conn)):
            self.value_conn, self.key_conn = mo, key

    def absorb(self, part: _Best) -> None:
        if part.value >= 0:
            self.offer(part.value, part.key, False)
        if part.value_conn >= 0:
            self.offer(part.value_conn, part.key_conn, True)
        self.count += part.count
        self.violations.extend(part.violations)


def _bipartite_part(n: int, a: int, shard, check: bool, max_cells) -> _Best:
    best = _Best()
    cert = certified_bound(n, a) if a >= 1 else Fraction(0)
    sides = (range(a), range(a, n))

    def visit(g: Graph, rows: Rows) -> None:
        mo = mostar_index(g)
        best.offer(mo, (a, rows), is_connected(g))
        if not check:
            return
        relax = relaxation_bound(g, sides)
        if not mo <= relax <= cert:
            best.violations.append(f"a={a} rows={rows}: Mo={mo}, relaxation={relax}, certified={cert}")
        if not theorem1_check(mo, n):
            best.violations.append(f"a={a} rows={rows}: 108*Mo^2 > n^6 with Mo={mo}")

    best.count = enumerate_bipartite(a, n - a, visit, shard=shard, max_cells=max_cells)
    return best


def _split_part(n: int, k: int, shard, check: bool, max_cells) -> _Best:
    best = _Best()

    def visit(g: Graph, rows: Rows) -> None:
        if check:
            audit = audit_split_graph(g, k)
            mo = audit.mostar
            best.violations.extend(f"k={k} rows={rows}: {v}" for v in audit.violations)
        else:
            mo = mostar_index(g)
        best.offer(mo, (k, rows), is_connected(g))

    best.count = enumerate_split(n, k, visit, shard=shard, max_cells=max_cells)
    return best


def _run(worker, n: int, params: list[int], shards: int, check: bool, max_cells) -> _Best:
    """Run ``worker`` over every parameter, optionally split into process shards."""
    for p in params:  # fail on capacity before spawning anything
        cells = p * (n - p)
        _guard(cells, max_cells, f"order-{n} search at size {p}")
    total = _Best()
    if shards <= 1:
        for p in params:
            total.absorb(worker(n, p, None, check, max_cells))
        return total
    with ProcessPoolExecutor(max_workers=shards) as pool:
        futures = [pool.submit(worker, n, p, (s, shards), check, max_cells)
                   for p in params for s in range(shards)]
        for fut in futures:
            total.absorb(fut.result())
    return total


def max_mostar_bipartite(
    n: int,
    *,
    sides: tuple[int, int] | None = None,
    shards: int = 1,
    check: bool = True,
    max_cells: int | None = MAX_CELLS,
    max_order: int | None = 10,
) -> SearchReport:
    """Largest Mostar index over bipartite graphs of order ``n``.

    Every side split ``a + b = n`` with ``a <= b`` is searched unless ``sides``
    fixes one. With ``check`` every graph is also tested against the
    relaxation bound and the certified dual bound, and against ``108 Mo^2 <= n^6``.
    """
    if max_order is not None and n > max_order:
        raise CapacityError(f"order {n} exceeds the limit {max_order}", n)
    if n < 1:
        raise ValueError("need n >= 1")
    if sides is not None:
        a, b = sorted(sides)
        if a + b != n:
            raise ValueError(f"sides {sides} do not add up to n={n}")
        params = [a]
    else:
        params = list(range(0, n // 2 + 1))
    best = _run(_bipartite_part, n, params, shards, check, max_cells)

    a, rows = best.key
    g = bipartite_from_rows(a, n - a, rows)
    report = SearchReport(
        "bipartite", n, best.count, best.value, g, {"a": a, "b": n - a},
        best.value_conn if best.value_conn >= 0 else None,
        bipartite_from_rows(best.key_conn[0], n - best.key_conn[0], best.key_conn[1])
        if best.value_conn >= 0 else None,
        violations=best.violations,
    )
    report.bounds["theorem1"] = THEOREM1_CONSTANT * n ** 3
    if a >= 1:
        report.bounds["relaxation"] = relaxation_bound(g, (range(a), range(a, n)))
        report.bounds["certified"] = certified_bound(n, a)
    report.checks["theorem1"] = theorem1_check(best.value, n)
    report.checks["checked_every_graph"] = check
    return report


def max_mostar_split(
    n: int,
    *,
    shards: int = 1,
    check: bool = True,
    max_cells: int | None = MAX_CELLS,
    max_order: int | None = 9,
) -> SearchReport:
    """Largest Mostar index over split graphs of order ``n`` (every clique size)."""
    if max_order is not None and n > max_order:
        raise CapacityError(f"order {n} exceeds the limit {max_order}", n)
    if n < 1:
        raise ValueError("need n >= 1")
    best = _run(_split_part, n, list(range(0, n + 1)), shards, check, max_cells)

    k, rows = best.key
    g = split_from_rows(n, k, rows)
    report = SearchReport(
        "split", n, best.count, best.value, g, {"k": k},
        best.value_conn if best.value_conn >= 0 else None,
        split_from_rows(n, best.key_conn[0], best.key_conn[1]) if best.value_conn >= 0 else None,
        violations=best.violations,
    )
    m = sum(bin(r).count("1") for r in rows)
    chain = theorem2_piecewise(n, k, m)
    join_k = max(range(n + 1), key=lambda j: (mo_split_join(j, n), -j))
    report.bounds.update(
        g=chain.g_value,
        piecewise=chain.piecewise_value,
        cap=chain.cap_value,
        best_split_join=mo_split_join(join_k, n),
        best_split_join_k=join_k,
    )
    report.checks["chain"] = best.value <= chain.g_value and chain.ordered
    report.checks["checked_every_graph"] = check
    return report


# ---------------------------------------------------------------------------
# closed-form scans and sharpness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Conjecture19Row:
    n: int
    a_third: int
    mo_third: int
    best_a: int
    mo_best: int

    @property
    def flagged(self) -> bool:
        return self.mo_best > self.mo_third


@dataclass
class Conjecture19Scan:
    rows: list[Conjecture19Row]

    @property
    def flagged(self) -> list[int]:
        return [r.n for r in self.rows if r.flagged]

    @property
    def smallest_flagged(self) -> int | None:
        return min(self.flagged, default=None)


def conjecture19_scan(n_max: int) -> Conjecture19Scan:
    """Compare ``K_{n//3, n - n//3}`` with the best complete bipartite graph, ``3 <= n <= n_max``."""
    if n_max < 3:
        raise ValueError("need n_max >= 3")
    rows = []
    for n in range(3, n_max + 1):
        a3 = n // 3
        best_a, best = best_complete_bipartite(n)
        rows.append(Conjecture19Row(n, a3, a3 * (n - a3) * (n - 2 * a3), best_a, best))
    return Conjecture19Scan(rows)


@dataclass(frozen=True)
class GapRow:
    n: int
    params: dict
    bound: Fraction | float
    mostar: int
    gap: Fraction | float
    gap_over_n2: float


@dataclass
class GapTable:
    family: str
    bound_name: str
    rows: list[GapRow]

    @property
    def max_ratio(self) -> float:
        return max(r.gap_over_n2 for r in self.rows)

    @property
    def all_nonnegative(self) -> bool:
        return all(r.gap >= 0 for r in self.rows)


FAMILIES = ("complete_bipartite_alpha1", "extremal_split")
SPLIT_BOUNDS = ("g", "piecewise", "cap")


def case_optimal_split(n: int) -> tuple[int, int]:
    """Clique size maximising the piecewise bound, and the matching cross-edge count.

    Low case: every cross edge present. High case: the integer ``m`` next to
    ``m*`` with the larger ``g``.
    """
    k = max(range(1, n), key=lambda j: (theorem2_piecewise(n, j).piecewise_value, -j))
    chain = theorem2_piecewise(n, k)
    full = k * (n - k)
    if chain.case_taken.value == "LOW":
        return k, full
    ms = m_star(n, k)
    candidates = {min(math.floor(ms), full), min(math.ceil(ms), full)}
    return k, max(sorted(candidates), key=lambda m: g_bound(n, k, m))


def sharpness_gap(family: str, n_values, bound: str = "piecewise") -> GapTable:
    """Bound minus the Mostar index of a construction, for each order in ``n_values``.

    ``complete_bipartite_alpha1`` compares ``K_{a, n-a}`` (best ``a``) with
    ``(sqrt(3)/18) n^3``. ``extremal_split`` uses ``case_optimal_split`` and
    compares with the named split bound (``g``, ``piecewise`` or ``cap``).
    """
    rows = []
    for n in n_values:
        if family == "complete_bipartite_alpha1":
            a, _ = best_complete_bipartite(n)
            mo = mostar_index(complete_bipartite(a, n - a))
            b = THEOREM1_CONSTANT * n ** 3
            params = {"a": a, "b": n - a}
            bound_name = "theorem1"
        elif family == "extremal_split":
            if bound not in SPLIT_BOUNDS:
                raise ValueError(f"unknown split bound {bound!r}; choose from {SPLIT_BOUNDS}")
            k, m = case_optimal_split(n)
            spec, g = extremal_split(n, k, m)
            mo = mostar_index(g)
            chain = theorem2_piecewise(n, k, m)
            b = {"g": chain.g_value, "piecewise": chain.piecewise_value, "cap": chain.cap_value}[bound]
            params = {"k": k, "m": m, "r": spec.r, "s": spec.s, "case": chain.case_taken.value}
            bound_name = bound
        else:
            raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
        gap = b - mo
        rows.append(GapRow(n, params, b, mo, gap, float(gap) / n ** 2))
    return GapTable(family, bound_name if rows else bound, rows)
