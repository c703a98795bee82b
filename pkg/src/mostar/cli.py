"""Command-line front end.

Exit status is 0 when every requested check passes, 1 when a check fails
(a JSON failure record goes to stderr) and 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import duality, families, search, split_bounds
from .graph_core import GraphError, edge_unbalances, format_edge_list, mostar_index, parse_edge_list
from .lp_relaxation import build_primal, format_lp, solve_simplex
from .serialize import csv_text, dumps, frac_str, to_jsonable


class CheckFailed(Exception):
    def __init__(self, message: str, record: dict | None = None):
        super().__init__(message)
        self.record = record or {}


def _emit(args, human: str, record, csv_rows: tuple[list, list] | None = None) -> None:
    if args.format == "json":
        print(dumps(record))
    elif args.format == "csv" and csv_rows is not None:
        sys.stdout.write(csv_text(*csv_rows))
    else:
        print(human)


def _int_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        return range(int(lo), int(hi) + 1) if sep else range(int(lo), int(lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_compute(args) -> None:
    g = parse_edge_list(Path(args.graph).read_text())
    rows = edge_unbalances(g)
    mo = mostar_index(g)
    record = {"n": g.n, "m": g.m, "mostar": mo,
              "edges": [{"u": e.edge[0], "v": e.edge[1], "n_uv": e.n_uv, "n_vu": e.n_vu,
                         "equidistant": e.equidistant} for e in rows]}
    lines = [f"mostar = {mo}"]
    if args.edges:
        lines += [f"{e.edge[0]} {e.edge[1]}  n_uv={e.n_uv} n_vu={e.n_vu} tied={e.equidistant}" for e in rows]
    _emit(args, "\n".join(lines), record,
          (["u", "v", "n_uv", "n_vu", "equidistant"],
           [[e.edge[0], e.edge[1], e.n_uv, e.n_vu, e.equidistant] for e in rows]))


def cmd_family(args) -> None:
    name, params = args.name, args.params
    need = {"kab": 2, "split-join": 2, "extremal-split": 3}
    if name not in need:
        raise ValueError(f"unknown family {name!r}; choose from {sorted(need)}")
    if len(params) != need[name]:
        raise ValueError(f"family {name} takes {need[name]} integers, got {len(params)}")
    closed = None
    if name == "kab":
        a, b = params
        g = families.complete_bipartite(a, b)
        closed = families.mo_complete_bipartite(a, b)
    elif name == "split-join":
        k, n = params
        g = families.split_join(k, n)
        closed = families.mo_split_join(k, n)
    else:
        n, k, m = params
        _, g = families.extremal_split(n, k, m)
    mo = mostar_index(g)
    record = {"family": name, "params": params, "n": g.n, "m": g.m, "mostar": mo, "closed_form": closed}
    text = format_edge_list(g, comment=f"{name} {' '.join(map(str, params))}\nmostar = {mo}")
    if args.output:
        Path(args.output).write_text(text)
        human = f"wrote {args.output}\nmostar = {mo}" + (f"\nclosed_form = {closed}" if closed is not None else "")
    else:
        human = text.rstrip("\n")
    _emit(args, human, record)
    if closed is not None and closed != mo:
        raise CheckFailed("closed form disagrees with BFS", record)


def cmd_lp(args) -> None:
    if args.dump:
        if args.n is None or args.k is None:
            raise ValueError("--dump needs N and K")
        sys.stdout.write(format_lp(build_primal(args.n, args.k)))
        return
    if args.n is not None and args.k is not None:
        pairs = [(args.n, args.k)]
    else:
        pairs = [(n, k) for n in range(2, args.n_max + 1) for k in range(1, n // 2 + 1)]
    rows, bad = [], []
    for n, k in pairs:
        res = solve_simplex(build_primal(n, k))
        pair = duality.claim2_solution(n, k)
        ok = res.status.value == "OPTIMAL" and res.value <= pair.total
        rows.append([n, k, res.status.value, res.value, pair.total, pair.case_tag.value, ok])
        if not ok:
            bad.append({"n": n, "k": k})
    header = ["n", "k", "status", "opt_p", "dual_p_plus_q", "case", "weak_duality_ok"]
    human = "\n".join(f"n={r[0]} k={r[1]} OPT(P)={r[3]} p+q={r[4]} {r[5]} {'ok' if r[6] else 'FAIL'}" for r in rows)
    record = [dict(zip(header, r)) for r in rows]
    if args.format == "human":
        print(human)
    elif args.format == "json":
        print(dumps(record))
    else:
        sys.stdout.write(csv_text(header, rows))
    if bad:
        raise CheckFailed("weak duality failed", {"failures": bad})


def certificate_record(n: int, k: int, tol: float) -> dict:
    if 2 * k > n:
        raise ValueError(f"k={k} exceeds n/2 for n={n}; mirror the sides and use k={n - k}")
    if k < 1:
        raise ValueError("k must be at least 1 (an empty side has Mostar index 0)")
    pair = duality.claim2_solution(n, k)
    alpha = Fraction(k, n)
    dprime_ok, dprime_bad = duality.dprime_feasible(pair, alpha)
    cert = duality.lift_certificate(pair, n, k)
    check = duality.dual_feasible(cert, n, k, tol=tol)
    bound = duality.certified_bound(n, k)
    within = duality.pair_within_theorem1(pair, alpha)
    return {
        "n": n, "k": k, "alpha": frac_str(alpha),
        "case": pair.case_tag.value,
        "p": frac_str(pair.p), "q": frac_str(pair.q), "p_plus_q": frac_str(pair.total),
        "bound": frac_str(bound), "bound_float": float(bound),
        "theorem1_bound_float": duality.THEOREM1_CONSTANT * n ** 3,
        "dprime_feasible": dprime_ok, "dprime_violations": dprime_bad,
        "dual_feasible": check.feasible,
        "worst_dual_slack": frac_str(check.worst_slack),
        "worst_dual_constraint": check.worst_constraint,
        "within_theorem1": within,
        "pass": dprime_ok and check.feasible and within,
    }


def cmd_certify(args) -> None:
    rec = certificate_record(args.n, args.k, args.tol)
    human = "\n".join(f"{k} = {v}" for k, v in rec.items())
    if args.format == "human":
        print(human)
    else:
        print(json.dumps(rec, indent=2))
    if not rec["pass"]:
        raise CheckFailed("certificate check failed", rec)


def cmd_margins(args) -> None:
    rep = duality.claim2_margins(args.grid)
    record = to_jsonable(rep) | {"all_positive": rep.all_positive}
    lines = [f"grid {rep.grid_points} points on [{rep.lo:.6f}, {rep.hi}]"]
    for name in rep.minima:
        lines.append(f"min {name} = {rep.minima[name]:.6f} at alpha = {rep.argmin[name]:.6f}")
    for name, ok in rep.monotone.items():
        lines.append(f"{name} monotone: {ok} (extreme slope {rep.derivative_bounds[name]:.5f})")
    _emit(args, "\n".join(lines), record,
          (["function", "min", "argmin"], [[k, v, rep.argmin[k]] for k, v in rep.minima.items()]))
    if not (rep.all_positive and all(rep.monotone.values())):
        raise CheckFailed("margin check failed", record)


def _chain_row(n: int, k: int, m: int) -> dict:
    chain = split_bounds.theorem2_piecewise(n, k, m)
    c3 = split_bounds.claim3_extremal_value(n, k, m)
    return {"n": n, "k": k, "m": m, "g": chain.g_value, "piecewise": chain.piecewise_value,
            "cap": chain.cap_value, "case": chain.case_taken.value, "m_star": chain.m_star,
            "claim3_bound": split_bounds.claim3_bound(n, k, m), "claim3_extremal": c3.value,
            "claim3_slack": c3.slack, "ordered": chain.ordered}


def cmd_splitbound(args) -> None:
    n, k = args.n, args.k
    if args.sweep_m:
        ms = range(0, k * (n - k) + 1)
    elif args.m is not None:
        ms = [args.m]
    else:
        ms = [min(round(split_bounds.m_star(n, k)), k * (n - k))]
    rows = [_chain_row(n, k, m) for m in ms]
    header = list(rows[0])
    human = "\n".join(
        f"m={r['m']}: g={r['g']} piecewise={r['piecewise']} cap={r['cap']} case={r['case']} "
        f"claim3 slack={r['claim3_slack']}" for r in rows)
    _emit(args, human, rows, (header, [[r[h] for h in header] for r in rows]))
    if not all(r["ordered"] for r in rows):
        raise CheckFailed("bound chain out of order", {"rows": to_jsonable(rows)})


def cmd_search(args) -> None:
    limits = {} if not args.force else {"max_cells": None, "max_order": None}
    if args.graph_class == "bipartite":
        rep = search.max_mostar_bipartite(args.n, sides=tuple(args.sides) if args.sides else None,
                                          shards=args.shards, **limits)
    else:
        rep = search.max_mostar_split(args.n, shards=args.shards, **limits)
    record = to_jsonable(rep)
    record["ok"] = rep.ok
    record["violations"] = rep.violations[:50]
    record["violation_count"] = len(rep.violations)
    lines = [f"{rep.graph_class} n={rep.n}: {rep.instances} graphs, max Mostar {rep.max_value} "
             f"({rep.maximizer_params}), max over connected {rep.max_connected}"]
    lines += [f"  {k} = {v}" for k, v in rep.bounds.items()]
    lines += [f"  check {k}: {v}" for k, v in rep.checks.items()]
    lines.append(f"  violations: {len(rep.violations)}")
    _emit(args, "\n".join(lines), record)
    if not rep.ok:
        raise CheckFailed("search found violations", {"violation_count": len(rep.violations)})


def cmd_conjecture19(args) -> None:
    scan = search.conjecture19_scan(args.n_max)
    header = ["n", "a_third", "mo_third", "best_a", "mo_best", "flagged"]
    rows = [[r.n, r.a_third, r.mo_third, r.best_a, r.mo_best, r.flagged] for r in scan.rows]
    record = {"rows": [dict(zip(header, r)) for r in rows], "smallest_flagged": scan.smallest_flagged,
              "flagged_count": len(scan.flagged)}
    human = "\n".join(f"n={r[0]}: K_{{{r[1]},{r[0] - r[1]}}} -> {r[2]}, best K_{{{r[3]},{r[0] - r[3]}}} -> {r[4]}"
                      + ("  *" if r[5] else "") for r in rows)
    human += f"\nsmallest n where n/3 is beaten: {scan.smallest_flagged}"
    _emit(args, human, record, (header, rows))


def cmd_gap(args) -> None:
    family = args.family.replace("-", "_")
    table = search.sharpness_gap(family, args.n, bound=args.bound)
    header = ["n", "params", "bound", "mostar", "gap", "gap_over_n2"]
    rows = [[r.n, json.dumps(r.params, sort_keys=True), r.bound, r.mostar, r.gap, r.gap_over_n2]
            for r in table.rows]
    record = to_jsonable(table) | {"max_gap_over_n2": table.max_ratio, "all_nonnegative": table.all_nonnegative}
    human = "\n".join(f"n={r.n} {r.params} bound={float(r.bound):.3f} Mo={r.mostar} "
                      f"gap/n^2={r.gap_over_n2:.5f}" for r in table.rows)
    human += f"\nmax gap/n^2 = {table.max_ratio:.5f}"
    _emit(args, human, record, (header, rows))
    if not table.all_nonnegative:
        raise CheckFailed("negative gap: a construction beats its bound", record)


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["human", "json", "csv"], default=None,
                        help="output format (default: csv for lp, json for certify, human otherwise)")
    common.add_argument("--tol", type=float, default=1e-9,
                        help="slack tolerance for dual feasibility (default 1e-9)")
    common.add_argument("--shards", type=int, default=1, help="worker processes for searches")
    common.add_argument("--force", action="store_true", help="lift search capacity guards")

    parser = argparse.ArgumentParser(prog="mostar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="Mostar index of an edge-list file")
    p.add_argument("graph")
    p.add_argument("--edges", action="store_true", help="list per-edge counts")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("family", parents=[common], help="build kab / split-join / extremal-split")
    p.add_argument("name")
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("lp", parents=[common], help="OPT(P) table against the dual pair")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("k", type=int, nargs="?")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--dump", action="store_true", help="print the LP in text form")
    p.set_defaults(func=cmd_lp, default_format="csv")

    p = sub.add_parser("certify", parents=[common], help="dual certificate for sides k, n-k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_certify, default_format="json")

    p = sub.add_parser("margins", parents=[common], help="high-case margin grid")
    p.add_argument("--grid", type=int, default=10_000)
    p.set_defaults(func=cmd_margins)

    p = sub.add_parser("splitbound", parents=[common], help="split-graph bound chain")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("m", type=int, nargs="?")
    p.add_argument("--sweep-m", action="store_true")
    p.set_defaults(func=cmd_splitbound)

    p = sub.add_parser("search", parents=[common], help="exhaustive maximum search")
    p.add_argument("graph_class", choices=["bipartite", "split"])
    p.add_argument("n", type=int)
    p.add_argument("--sides", type=int, nargs=2, metavar=("A", "B"))
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("conjecture19", parents=[common], help="n/3 versus best complete bipartite")
    p.add_argument("--n-max", type=int, default=100)
    p.set_defaults(func=cmd_conjecture19)

    p = sub.add_parser("gap", parents=[common], help="sharpness gap table")
    p.add_argument("family", choices=["complete-bipartite-alpha1", "extremal-split"])
    p.add_argument("--n", type=_int_range, default=range(10, 201), help="N or LO..HI")
    p.add_argument("--bound", choices=list(search.SPLIT_BOUNDS), default="piecewise")
    p.set_defaults(func=cmd_gap)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "default_format", "human")
    if args.tol <= 0:
        parser.error("--tol must be positive")
    try:
        args.func(args)
    except CheckFailed as exc:
        print(json.dumps({"ok": False, "error": str(exc), **to_jsonable(exc.record)}), file=sys.stderr)
        return 1
    except (GraphError, ValueError, OSError) as exc:
        print(json.dumps({"ok": False, "error": str(exc), "kind": type(exc).__name__}), file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
