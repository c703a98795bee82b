"""End-to-end acceptance gate: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -s`` to see the lines as they happen;
they are also repeated in the terminal summary.
"""

import time
from fractions import Fraction
from itertools import product

import pytest

from mostar.duality import (
    ALPHA2,
    Case,
    claim2_margins,
    claim2_solution,
    dual_feasible,
    lift_certificate,
)
from mostar.families import (
    complete_bipartite,
    mo_complete_bipartite,
    mo_split_join,
    split_join,
)
from mostar.graph_core import mostar_index
from mostar.lp_relaxation import Status, build_primal, solve_simplex
from mostar.search import conjecture19_scan, max_mostar_bipartite, max_mostar_split, sharpness_gap
from mostar.split_bounds import claim3_bound, claim3_extremal_value, weighted_absdiff_sum

RESULTS: list[str] = []


def report(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str) -> None:
    ok = ok and elapsed <= limit
    line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}: {detail} ({elapsed:.2f}s, limit {limit:g}s)"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_1_closed_forms():
    t0 = time.perf_counter()
    mismatches = []
    graphs = 0
    for a, b in product(range(13), repeat=2):
        graphs += 1
        if mo_complete_bipartite(a, b) != mostar_index(complete_bipartite(a, b)):
            mismatches.append(("K", a, b))
    for n in range(13):
        for k in range(n + 1):
            graphs += 1
            if mo_split_join(k, n) != mostar_index(split_join(k, n)):
                mismatches.append(("S", k, n))
    anchors = mo_complete_bipartite(2, 4) == 16 and mostar_index(split_join(2, 6)) == 24
    report(1, "closed forms", not mismatches and anchors, time.perf_counter() - t0, 10,
           f"{graphs} graphs, {len(mismatches)} mismatches, anchors 16/24 {'ok' if anchors else 'wrong'}")


def test_2_bipartite_exhaustive():
    t0 = time.perf_counter()
    instances, violations, checks_ok = 0, 0, True
    for n in range(1, 9):
        rep = max_mostar_bipartite(n, check=True)
        instances += rep.instances
        violations += len(rep.violations)
        checks_ok &= rep.ok
    report(2, "bipartite chain Mo <= relaxation <= certified, 108 Mo^2 <= n^6", violations == 0 and checks_ok,
           time.perf_counter() - t0, 300, f"{instances} graphs with n <= 8, {violations} violations")


def test_3_duality():
    t0 = time.perf_counter()
    failures, worst_high = [], None
    certs = 0
    for n in (6, 12, 30, 60, 120, 200):
        for k in range(1, n // 2 + 1):
            pair = claim2_solution(n, k)
            tol = 0 if pair.case_tag is Case.LOW_ALPHA else 1e-9
            check = dual_feasible(lift_certificate(pair, n, k), n, k, tol=tol)
            certs += 1
            if not check.feasible:
                failures.append((n, k))
            if pair.case_tag is Case.HIGH_ALPHA:
                worst_high = check.worst_slack if worst_high is None else min(worst_high, check.worst_slack)
    weak = []
    for n in range(2, 9):
        for k in range(1, n // 2 + 1):
            res = solve_simplex(build_primal(n, k))
            if res.status is not Status.OPTIMAL or res.value > claim2_solution(n, k).total:
                weak.append((n, k))
    report(3, "dual certificates and weak duality", not failures and not weak, time.perf_counter() - t0, 120,
           f"{certs} certificates feasible (worst high-case slack {float(worst_high):.3g}), "
           f"{len(weak)} weak-duality failures for n <= 8")


def test_4_margins():
    t0 = time.perf_counter()
    rep = claim2_margins(10_000)
    mn, arg = rep.minima, rep.argmin
    near_a2 = 1e-3
    ok = (
        0.17487 <= mn["q"] <= 0.17489
        and 0 < mn["f1"] < 0.001 and abs(arg["f1"] - ALPHA2) < near_a2
        and 0 < mn["f2"] < 0.0005 and abs(arg["f2"] - ALPHA2) < near_a2
        and 0.09 < mn["f3"] < 0.095 and arg["f3"] == pytest.approx(0.5)
        and all(rep.monotone.values())
    )
    report(4, "margin grid", ok, time.perf_counter() - t0, 5,
           f"min q={mn['q']:.5f}, f1={mn['f1']:.6f}, f2={mn['f2']:.6f}, f3={mn['f3']:.5f}, "
           f"monotone={all(rep.monotone.values())}")


def test_5_split_exhaustive():
    t0 = time.perf_counter()
    instances, violations, ok = 0, 0, True
    for n in range(1, 9):
        rep = max_mostar_split(n, check=True)
        instances += rep.instances
        violations += len(rep.violations)
        ok &= rep.ok
    report(5, "split chain Mo <= g <= piecewise <= 4n^3/27 and per-edge identities", ok and violations == 0,
           time.perf_counter() - t0, 300, f"{instances} split graphs with n <= 8, {violations} violations")


def test_6_degree_gap_oracle():
    t0 = time.perf_counter()
    cases, bad = 0, []
    for k in range(1, 6):
        for w in range(1, 6):
            best: dict[int, int] = {}
            for seq in product(range(w + 1), repeat=k):
                seq = sorted(seq, reverse=True)
                m = sum(seq)
                best[m] = max(best.get(m, -1), weighted_absdiff_sum(seq))
            for m, value in best.items():
                cases += 1
                e = claim3_extremal_value(k + w, k, m)
                if e.value != value or claim3_bound(k + w, k, m) - e.value != Fraction(e.s * (w - e.s), w):
                    bad.append((k + w, k, m))
    report(6, "degree-gap maximiser and slack identity", not bad, time.perf_counter() - t0, 30,
           f"{cases} (n,k,m) cases, {len(bad)} mismatches")


def _trend_ok(table) -> tuple[bool, float, float]:
    ratios = [r.gap_over_n2 for r in table.rows]
    half = len(ratios) // 2
    lower, upper = max(ratios[:half]), max(ratios[half:])
    return table.all_nonnegative and max(ratios) <= 0.5 and upper <= lower, lower, upper


def test_7_sharpness():
    t0 = time.perf_counter()
    n_values = range(10, 201)
    tables = [
        ("K at best a vs sqrt(3)/18 n^3", sharpness_gap("complete_bipartite_alpha1", n_values)),
        ("extremal split vs g", sharpness_gap("extremal_split", n_values, bound="g")),
        ("extremal split vs piecewise", sharpness_gap("extremal_split", n_values, bound="piecewise")),
    ]
    ok = True
    parts = []
    for name, table in tables:
        good, lower, upper = _trend_ok(table)
        ok &= good
        parts.append(f"{name}: max gap/n^2 {lower:.4f} (n<105) vs {upper:.4f} (n>=105)")
    report(7, "sharpness gaps are O(n^2)", ok, time.perf_counter() - t0, 120, "; ".join(parts))


def test_8_conjecture19():
    t0 = time.perf_counter()
    scan = conjecture19_scan(100)
    row6 = next(r for r in scan.rows if r.n == 6)
    ok = bool(scan.flagged) and row6.flagged and (row6.mo_best, row6.mo_third) == (20, 16)
    report(8, "n/3 conjecture refuted", ok, time.perf_counter() - t0, 1,
           f"{len(scan.flagged)} flagged orders up to 100, smallest {scan.smallest_flagged} "
           f"({row6.mo_best} > {row6.mo_third})")
