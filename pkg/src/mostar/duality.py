"""Dual certificates for the bipartite Mostar bound.

A two-number pair ``(p, q)`` that satisfies a small nonlinear system lifts to
a feasible solution of the dual of the degree-profile LP, and ``p + q`` then
bounds that LP's optimum by weak duality. The explicit pairs below make the
bound ``Mo(G) <= k(n-k) n (p+q)``, and that never exceeds ``(sqrt(3)/18) n^3``.

Pairs and lifted certificates are exact rationals. Constraints involving
square roots are decided exactly by squaring both sides; floats appear only
in reported slacks and in the margin grid.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational, Real

import numpy as np

P_COEF = Fraction(42, 100)
Q_CONST = Fraction(9622, 100000)
ALPHA2 = (5 - math.sqrt(17)) / 4
THEOREM1_CONSTANT = math.sqrt(3) / 18


class Case(enum.Enum):
    LOW_ALPHA = "LOW_ALPHA"
    HIGH_ALPHA = "HIGH_ALPHA"


@dataclass(frozen=True)
class DualPair:
    p: Fraction
    q: Fraction
    case_tag: Case

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"dual pair must be nonnegative, got p={self.p}, q={self.q}")

    @property
    def total(self) -> Fraction:
        return self.p + self.q


@dataclass(frozen=True)
class DualCertificate:
    n: int
    k: int
    p: Fraction
    q: Fraction
    p_vec: tuple[Fraction, ...]
    q_vec: tuple[Fraction, ...]


@dataclass(frozen=True)
class HyperbolaMin:
    value: float
    argmin: float
    attained: bool


def min_affine_hyperbola(beta: float, gamma: float, delta: float) -> HyperbolaMin:
    """Infimum of ``beta/x + gamma*x`` over ``0 < x <= delta``.

    With ``beta == 0`` the infimum 0 is approached as ``x -> 0`` but not attained.
    """
    if gamma <= 0 or delta <= 0:
        raise ValueError("gamma and delta must be positive")
    if beta < 0:
        raise ValueError("beta must be nonnegative")
    if beta == 0:
        return HyperbolaMin(0.0, 0.0, False)
    x0 = math.sqrt(beta / gamma)
    if delta >= x0:
        return HyperbolaMin(2 * math.sqrt(beta * gamma), x0, True)
    return HyperbolaMin(beta / delta + gamma * delta, float(delta), True)


# ---------------------------------------------------------------------------
# the two-variable program
# ---------------------------------------------------------------------------


def _sqrt_term_ok(rest, inside, exact: bool, tol: float) -> tuple[bool, float]:
    """Decide ``rest + 2*sqrt(inside) >= 1``; return (ok, float slack)."""
    slack = float(rest) + 2 * math.sqrt(float(inside)) - 1
    if not exact:
        return slack >= -tol, slack
    need = 1 - rest
    return need <= 0 or 4 * inside >= need * need, slack


def dprime_feasible(pair: DualPair, alpha: Real, tol: float = 1e-9) -> tuple[bool, list[str]]:
    """Check ``pair`` against the two-variable program at side ratio ``alpha``.

    Rational ``alpha`` (with the pair's rational entries) is decided exactly and
    ``tol`` is ignored; float ``alpha`` uses ``tol`` on each slack.
    """
    if not 0 < alpha <= Fraction(1, 2):
        raise ValueError(f"alpha must lie in (0, 1/2], got {alpha}")
    exact = isinstance(alpha, Rational)
    p, q = (pair.p, pair.q) if exact else (float(pair.p), float(pair.q))
    violated = []

    def ge(lhs, rhs) -> bool:
        return lhs >= rhs if exact else lhs - rhs >= -tol

    if not ge(p, 0):
        violated.append("p >= 0")
    if not ge(q, 0):
        violated.append("q >= 0")
    if not ge(p + q, 1 - 2 * alpha):
        violated.append("p + q >= 1 - 2*alpha")
    if q < 2 * alpha:
        ok, _ = _sqrt_term_ok(p, 2 * q * alpha, exact, tol)
        if not ok:
            violated.append("p + 2*sqrt(2*q*alpha) >= 1")
    if p < 2 * alpha * alpha / (1 - alpha):
        ok, _ = _sqrt_term_ok(q, 2 * p * (1 - alpha), exact, tol)
        if not ok:
            violated.append("2*sqrt(2*p*(1-alpha)) + q >= 1")
    return not violated, violated


def low_case(alpha: Rational) -> bool:
    """Exact test for ``alpha <= (5 - sqrt 17)/4`` on ``alpha <= 1/2``."""
    return 2 * alpha * alpha - 5 * alpha + 1 >= 0


def claim2_pair(alpha) -> DualPair:
    """Explicit feasible pair at side ratio ``alpha`` (rational for exact use)."""
    if low_case(alpha):
        p = 2 * alpha * alpha / (1 - alpha)
        return DualPair(p, 1 - 2 * alpha - p, Case.LOW_ALPHA)
    p = P_COEF * alpha
    return DualPair(p, Q_CONST / (alpha * (1 - alpha)) - p, Case.HIGH_ALPHA)


def claim2_solution(n: int, k: int) -> DualPair:
    if not 1 <= k:
        raise ValueError(f"need k >= 1, got k={k}")
    if 2 * k > n:
        raise ValueError(f"k={k} exceeds n/2 for n={n}; swap the sides so the smaller one is k")
    return claim2_pair(Fraction(k, n))


def lift_certificate(pair: DualPair, n: int, k: int) -> DualCertificate:
    """Lift ``(p, q)`` to the full dual: ``p_i = (n-k) p / i``, ``q_j = k q / j``."""
    big = n - k
    p_vec = (Fraction(1),) + tuple(big * pair.p / i for i in range(1, big + 1))
    q_vec = (Fraction(1),) + tuple(k * pair.q / j for j in range(1, k + 1))
    return DualCertificate(n, k, pair.p, pair.q, p_vec, q_vec)


@dataclass
class DualCheck:
    feasible: bool
    worst_slack: Fraction
    worst_constraint: str
    violations: list[str] = field(default_factory=list)


def dual_feasible(cert: DualCertificate, n: int, k: int, tol: float = 0) -> DualCheck:
    """Check every constraint of the dual LP for sides ``k``, ``n-k``.

    Slacks are exact rationals; a constraint fails when its slack is below
    ``-tol``. The pair constraints are ``p_i + q_j >= 1 - 2 min(i,j)/n``.
    """
    big = n - k
    if len(cert.p_vec) != big + 1 or len(cert.q_vec) != k + 1:
        raise ValueError("certificate dimensions do not match (n, k)")
    tol = Fraction(tol)
    worst, where = None, ""
    violations = []

    def note(slack: Fraction, label: str):
        nonlocal worst, where
        if worst is None or slack < worst:
            worst, where = slack, label
        if slack < -tol:
            violations.append(label)

    for i, pi in enumerate(cert.p_vec):
        note(cert.p - Fraction(i, big) * pi, f"p >= i*p_i/(n-k) at i={i}")
    for j, qj in enumerate(cert.q_vec):
        note(cert.q - Fraction(j, k) * qj, f"q >= j*q_j/k at j={j}")
    rhs_by_min = [1 - Fraction(2 * t, n) for t in range(max(big, k) + 1)]
    for j, qj in enumerate(cert.q_vec):
        for i, pi in enumerate(cert.p_vec):
            slack = pi + qj - rhs_by_min[min(i, j)]
            if worst is None or slack < worst or slack < -tol:
                note(slack, f"p_i + q_j >= 1 - 2min(i,j)/n at (i,j)=({i},{j})")
    return DualCheck(not violations, worst, where, violations)


def dual_value(cert: DualCertificate) -> Fraction:
    return cert.p + cert.q


def certified_bound(n: int, k: int) -> Fraction:
    """``k(n-k) n (p+q)``: an exact upper bound on Mo for sides ``k <= n-k``."""
    pair = claim2_solution(n, k)
    return k * (n - k) * n * pair.total


def theorem1_check(mo: int, n: int) -> bool:
    """Exact test of ``mo <= (sqrt(3)/18) n^3`` as ``108 mo^2 <= n^6``."""
    if mo < 0:
        raise ValueError("Mostar index is nonnegative")
    return 108 * mo * mo <= n ** 6


def pair_within_theorem1(pair: DualPair, alpha: Fraction) -> bool:
    """Exact check that ``alpha(1-alpha)(p+q) <= sqrt(3)/18``."""
    scaled = alpha * (1 - alpha) * pair.total
    return scaled <= 0 or 108 * scaled * scaled <= 1


# ---------------------------------------------------------------------------
# high-case margins on [alpha2, 1/2]
# ---------------------------------------------------------------------------


def high_case_functions(alpha: np.ndarray) -> dict[str, np.ndarray]:
    """``q`` and the three feasibility margins of the high-case pair."""
    c, kp = float(Q_CONST), float(P_COEF)
    p = kp * alpha
    q = c / (alpha * (1 - alpha)) - p
    return {
        "q": q,
        "f1": p + q - (1 - 2 * alpha),
        "f2": p + 2 * np.sqrt(2 * q * alpha) - 1,
        "f3": 2 * np.sqrt(2 * p * (1 - alpha)) + q - 1,
    }


@dataclass
class MarginReport:
    grid_points: int
    lo: float
    hi: float
    minima: dict[str, float]
    argmin: dict[str, float]
    monotone: dict[str, bool]
    derivative_bounds: dict[str, float]

    @property
    def all_positive(self) -> bool:
        return all(v > 0 for v in self.minima.values())


_EXPECTED_TREND = {"f1": 1, "f2": 1, "f3": -1}


def claim2_margins(grid_points: int = 10_000) -> MarginReport:
    """Evaluate ``q``, ``f1``, ``f2``, ``f3`` on a uniform grid over ``[alpha2, 1/2]``.

    ``monotone`` records whether f1 and f2 are nondecreasing and f3
    nonincreasing between every pair of consecutive grid points.
    ``derivative_bounds`` gives finite-difference extremes of the slopes
    (min slope for f1 and f2, max slope for f3).
    """
    if grid_points < 2:
        raise ValueError("need at least two grid points")
    alpha = np.linspace(ALPHA2, 0.5, grid_points)
    vals = high_case_functions(alpha)
    minima, argmin, monotone, slopes = {}, {}, {}, {}
    for name, v in vals.items():
        t = int(np.argmin(v))
        minima[name] = float(v[t])
        argmin[name] = float(alpha[t])
    for name, sign in _EXPECTED_TREND.items():
        diffs = np.diff(vals[name])
        monotone[name] = bool(np.all(sign * diffs >= 0))
        d = diffs / np.diff(alpha)
        slopes[name] = float(d.min() if sign > 0 else d.max())
    return MarginReport(grid_points, ALPHA2, 0.5, minima, argmin, monotone, slopes)
