"""Degree-profile relaxation of the Mostar index for bipartite graphs.

A bipartite graph with sides of sizes ``k`` and ``n-k`` is summarised by its
degree profile: how many vertices of each degree sit on each side, and how
many edges join a degree-``i`` vertex of side A to a degree-``j`` vertex of
side B. Replacing every edge's unbalance by ``n - 2*min(deg u, deg v)`` gives
an upper bound, and the normalised profile is a feasible point of a linear
program over all such profiles. Everything here is exact ``Fraction``
arithmetic.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graph_core import Graph, GraphError, bipartition


@dataclass(frozen=True)
class DegreeProfile:
    n: int
    k: int
    x: dict[int, int]
    y: dict[int, int]
    m: dict[tuple[int, int], int]

    def check(self) -> list[str]:
        """Return the violated profile invariants (empty when consistent)."""
        problems = []
        if sum(self.x.values()) != self.k:
            problems.append("side A counts do not sum to k")
        if sum(self.y.values()) != self.n - self.k:
            problems.append("side B counts do not sum to n-k")
        row = Counter()
        col = Counter()
        for (i, j), c in self.m.items():
            row[i] += c
            col[j] += c
            if i > self.n - self.k or j > self.k:
                problems.append(f"degree pair ({i}, {j}) out of range")
        for i in set(self.x) | set(row):
            if row[i] != i * self.x.get(i, 0):
                problems.append(f"row {i}: edge count {row[i]} != {i}*{self.x.get(i, 0)}")
        for j in set(self.y) | set(col):
            if col[j] != j * self.y.get(j, 0):
                problems.append(f"column {j}: edge count {col[j]} != {j}*{self.y.get(j, 0)}")
        return problems


def degree_profile(g: Graph, partition: tuple[Iterable[int], Iterable[int]]) -> DegreeProfile:
    side_a, side_b = bipartition(g, override=partition)
    deg = [g.degree(v) for v in range(g.n)]
    x = Counter(deg[v] for v in side_a)
    y = Counter(deg[v] for v in side_b)
    m: Counter = Counter()
    for u, v in g.edges:
        a, b = (u, v) if u in side_a else (v, u)
        m[deg[a], deg[b]] += 1
    return DegreeProfile(g.n, len(side_a), dict(x), dict(y), dict(m))


def relaxation_bound(g: Graph, partition=None) -> Fraction:
    """Sum over edges of ``n - 2*min(deg u, deg v)``; never below the Mostar index."""
    parts = bipartition(g, override=partition)
    if parts is None:
        raise GraphError("graph is not bipartite")
    n = g.n
    total = sum(n - 2 * min(g.degree(u), g.degree(v)) for u, v in g.edges)
    return Fraction(total)


# ---------------------------------------------------------------------------
# linear programs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LinearProgram:
    """``maximize c.x  subject to  A x = b``, with optional sign constraints.

    ``nonneg[v]`` False marks a free variable.
    """

    objective: list[Fraction]
    rows: list[list[Fraction]]
    rhs: list[Fraction]
    nonneg: list[bool] = field(default=None)
    var_names: list[str] = field(default=None)
    row_names: list[str] = field(default=None)

    def __post_init__(self):
        nv = len(self.objective)
        if len(self.rows) != len(self.rhs):
            raise ValueError("row count and right-hand side length differ")
        if any(len(r) != nv for r in self.rows):
            raise ValueError("every constraint row needs one coefficient per variable")
        if self.nonneg is None:
            object.__setattr__(self, "nonneg", [True] * nv)
        if self.var_names is None:
            object.__setattr__(self, "var_names", [f"v{t}" for t in range(nv)])
        if self.row_names is None:
            object.__setattr__(self, "row_names", [f"r{t}" for t in range(len(self.rows))])
        if len(self.nonneg) != nv or len(self.var_names) != nv:
            raise ValueError("variable metadata length mismatch")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    def value(self, point: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, point)), Fraction(0))

    def residuals(self, point: Sequence[Fraction]) -> list[Fraction]:
        return [sum((a * v for a, v in zip(row, point)), Fraction(0)) - b
                for row, b in zip(self.rows, self.rhs)]

    def is_feasible(self, point: Sequence[Fraction]) -> bool:
        if len(point) != self.num_vars:
            return False
        if any(nn and v < 0 for nn, v in zip(self.nonneg, point)):
            return False
        return all(r == 0 for r in self.residuals(point))


def build_primal(n: int, k: int) -> LinearProgram:
    """The degree-profile LP for sides of sizes ``k`` and ``n-k``.

    Variables are ``x_0..x_{n-k}``, ``y_0..y_k`` and ``m_{i,j}`` in row-major
    order. Constraints: both side distributions sum to one, and every row and
    column of ``m`` matches the edge count implied by ``x`` and ``y``.
    """
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")
    big, small = n - k, k
    I = range(big + 1)
    J = range(small + 1)
    names = [f"x_{i}" for i in I] + [f"y_{j}" for j in J] + [f"m_{i},{j}" for i in I for j in J]
    nx_, ny = len(I), len(J)
    nv = nx_ + ny + nx_ * ny

    def m_idx(i: int, j: int) -> int:
        return nx_ + ny + i * ny + j

    zero, one = Fraction(0), Fraction(1)
    objective = [zero] * (nx_ + ny)
    objective += [one - Fraction(2 * min(i, j), n) for i in I for j in J]

    rows, rhs, row_names = [], [], []
    row = [zero] * nv
    for i in I:
        row[i] = one
    rows.append(row); rhs.append(one); row_names.append("sum_x")
    row = [zero] * nv
    for j in J:
        row[nx_ + j] = one
    rows.append(row); rhs.append(one); row_names.append("sum_y")
    for i in I:
        row = [zero] * nv
        for j in J:
            row[m_idx(i, j)] = one
        row[i] = -Fraction(i, big)
        rows.append(row); rhs.append(zero); row_names.append(f"row_{i}")
    for j in J:
        row = [zero] * nv
        for i in I:
            row[m_idx(i, j)] = one
        row[nx_ + j] = -Fraction(j, small)
        rows.append(row); rhs.append(zero); row_names.append(f"col_{j}")
    return LinearProgram(objective, rows, rhs, [True] * nv, names, row_names)


@dataclass(frozen=True)
class ProfilePoint:
    point: list[Fraction]
    objective: Fraction
    feasible: bool
    residuals: list[Fraction]


def profile_to_point(p: DegreeProfile) -> ProfilePoint:
    """Normalise a profile into a point of ``build_primal(p.n, p.k)``."""
    problems = p.check()
    if problems:
        raise ValueError("inconsistent degree profile: " + "; ".join(problems))
    n, k = p.n, p.k
    lp = build_primal(n, k)
    big = n - k
    nx_, ny = big + 1, k + 1
    point = [Fraction(0)] * lp.num_vars
    for i, c in p.x.items():
        point[i] = Fraction(c, k)
    for j, c in p.y.items():
        point[nx_ + j] = Fraction(c, big)
    for (i, j), c in p.m.items():
        point[nx_ + ny + i * ny + j] = Fraction(c, k * big)
    res = lp.residuals(point)
    feasible = lp.is_feasible(point)
    if not feasible:
        raise RuntimeError("graph-derived degree profile is infeasible for the primal LP")
    return ProfilePoint(point, lp.value(point), feasible, res)


# ---------------------------------------------------------------------------
# exact simplex
# ---------------------------------------------------------------------------


class Status(enum.Enum):
    OPTIMAL = "OPTIMAL"
    UNBOUNDED = "UNBOUNDED"
    INFEASIBLE = "INFEASIBLE"


@dataclass(frozen=True)
class SimplexResult:
    status: Status
    value: Fraction | None
    point: list[Fraction] | None
    pivots: int = 0


class _Tableau:
    """Dense tableau for ``max c.x, A x = b, x >= 0`` with ``b >= 0``.

    Row ``t`` of ``a`` expresses basic variable ``basis[t]``; ``z`` holds the
    reduced costs and ``z0`` the current objective value.
    """

    def __init__(self, a: list[list[Fraction]], b: list[Fraction], basis: list[int]):
        self.a = a
        self.b = b
        self.basis = basis
        self.pivots = 0

    def set_objective(self, c: Sequence[Fraction]) -> None:
        # reduced cost of column v: c_v - sum_t c_{basis[t]} a[t][v]
        nv = len(c)
        z = list(c)
        z0 = Fraction(0)
        for t, bv in enumerate(self.basis):
            cb = c[bv]
            if cb:
                row = self.a[t]
                for v in range(nv):
                    if row[v]:
                        z[v] -= cb * row[v]
                z0 += cb * self.b[t]
        self.z, self.z0 = z, z0

    def pivot(self, t: int, col: int) -> None:
        a, b = self.a, self.b
        prow = a[t]
        piv = prow[col]
        if piv != 1:
            inv = 1 / piv
            for v, val in enumerate(prow):
                if val:
                    prow[v] = val * inv
            b[t] *= inv
        nz = [v for v, val in enumerate(prow) if val]
        for s in range(len(a)):
            if s == t:
                continue
            f = a[s][col]
            if f:
                row = a[s]
                for v in nz:
                    row[v] -= f * prow[v]
                b[s] -= f * b[t]
        f = self.z[col]
        if f:
            for v in nz:
                self.z[v] -= f * prow[v]
            self.z0 += f * b[t]
        self.basis[t] = col
        self.pivots += 1

    def run(self, allowed: Sequence[bool]) -> bool:
        """Bland's rule iterations; return False if the objective is unbounded."""
        while True:
            col = next((v for v, zv in enumerate(self.z) if zv > 0 and allowed[v]), None)
            if col is None:
                return True
            best_t, best_ratio = None, None
            for t, row in enumerate(self.a):
                if row[col] > 0:
                    ratio = self.b[t] / row[col]
                    if (best_ratio is None or ratio < best_ratio
                            or (ratio == best_ratio and self.basis[t] < self.basis[best_t])):
                        best_t, best_ratio = t, ratio
            if best_t is None:
                return False
            self.pivot(best_t, col)


def solve_simplex(lp: LinearProgram) -> SimplexResult:
    """Maximise ``lp`` exactly with a two-phase simplex and Bland's rule."""
    # free variables are split as v = v+ - v-
    cols: list[tuple[int, int]] = []
    for v, nn in enumerate(lp.nonneg):
        cols.append((v, 1))
        if not nn:
            cols.append((v, -1))
    nstd = len(cols)
    a = []
    b = []
    for row, rhs in zip(lp.rows, lp.rhs):
        r = [Fraction(row[v]) * sgn for v, sgn in cols]
        rhs = Fraction(rhs)
        if rhs < 0:
            r = [-x for x in r]
            rhs = -rhs
        a.append(r)
        b.append(rhs)
    c = [Fraction(lp.objective[v]) * sgn for v, sgn in cols]

    m = len(a)
    for t in range(m):
        a[t].extend(Fraction(1 if s == t else 0) for s in range(m))
    tab = _Tableau(a, b, [nstd + t for t in range(m)])

    # phase 1: maximise minus the sum of artificials
    tab.set_objective([Fraction(0)] * nstd + [Fraction(-1)] * m)
    tab.run([True] * (nstd + m))
    if tab.z0 != 0:
        return SimplexResult(Status.INFEASIBLE, None, None, tab.pivots)

    # drive remaining (zero-level) artificials out of the basis, drop redundant rows
    t = 0
    while t < len(tab.a):
        if tab.basis[t] >= nstd:
            col = next((v for v in range(nstd) if tab.a[t][v] != 0), None)
            if col is None:
                del tab.a[t], tab.b[t], tab.basis[t]
                continue
            tab.pivot(t, col)
        t += 1
    for row in tab.a:
        del row[nstd:]

    tab.set_objective(c)
    if not tab.run([True] * nstd):
        return SimplexResult(Status.UNBOUNDED, None, None, tab.pivots)

    std = [Fraction(0)] * nstd
    for t, bv in enumerate(tab.basis):
        std[bv] = tab.b[t]
    point = [Fraction(0)] * lp.num_vars
    for (v, sgn), val in zip(cols, std):
        point[v] += sgn * val
    value = lp.value(point)
    if value != tab.z0 or not lp.is_feasible(point):
        raise RuntimeError("simplex produced a point that fails exact re-verification")
    return SimplexResult(Status.OPTIMAL, value, point, tab.pivots)


# ---------------------------------------------------------------------------
# plain-text LP dump:  "max: c1 c2 ..." then one "a1 a2 ... = b  # name" per row
# ---------------------------------------------------------------------------


def _frac(s: str) -> Fraction:
    return Fraction(s)


def format_lp(lp: LinearProgram) -> str:
    def fmt(v: Fraction) -> str:
        return f"{v.numerator}/{v.denominator}"

    lines = ["vars: " + " ".join(n if nn else n + "~free" for n, nn in zip(lp.var_names, lp.nonneg)),
             "max: " + " ".join(fmt(c) for c in lp.objective)]
    for row, rhs, name in zip(lp.rows, lp.rhs, lp.row_names):
        lines.append(" ".join(fmt(a) for a in row) + f" = {fmt(rhs)}  # {name}")
    return "\n".join(lines) + "\n"


def parse_lp(text: str) -> LinearProgram:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2 or not lines[0].startswith("vars:") or not lines[1].startswith("max:"):
        raise ValueError("LP text must start with 'vars:' and 'max:' lines")
    names, nonneg = [], []
    for tok in lines[0][5:].split():
        free = tok.endswith("~free")
        names.append(tok[:-5] if free else tok)
        nonneg.append(not free)
    objective = [_frac(t) for t in lines[1][4:].split()]
    rows, rhs, row_names = [], [], []
    for lineno, ln in enumerate(lines[2:], start=3):
        body, _, name = ln.partition("#")
        lhs, eq, r = body.partition("=")
        if not eq:
            raise ValueError(f"line {lineno}: constraint without '='")
        rows.append([_frac(t) for t in lhs.split()])
        rhs.append(_frac(r.strip()))
        row_names.append(name.strip() or f"r{len(rows) - 1}")
    return LinearProgram(objective, rows, rhs, nonneg, names, row_names)
