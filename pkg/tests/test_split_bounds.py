import math
from fractions import Fraction as F
from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mostar.families import extremal_split, mo_split_join, split_join
from mostar.graph_core import GraphError, edge_unbalance, from_edge_list, mostar_index
from mostar.split_bounds import (
    SplitCase,
    audit_split_graph,
    cap,
    claim3_bound,
    claim3_extremal_value,
    clique_pair_unbalance,
    cross_edge_bound,
    g_bound,
    m_star,
    scalar_envelope,
    theorem2_piecewise,
    weighted_absdiff_sum,
)


@st.composite
def split_graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, n))
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    cross = [(u, v) for u in range(k) for v in range(k, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(cross), max_size=len(cross)))
    pairs += [e for e, on in zip(cross, bits) if on]
    return from_edge_list(n, pairs), k


# --- per-edge pieces -----------------------------------------------------------


def test_cross_edge_bound_examples():
    assert cross_edge_bound(6, 2) == 3
    assert edge_unbalance(split_join(2, 6), 0, 2).unbalance == 3
    assert cross_edge_bound(4, 1) == 2
    assert cross_edge_bound(7, 6) == 0


@pytest.mark.parametrize("dv", [0, 6])
def test_cross_edge_bound_range(dv):
    with pytest.raises(ValueError):
        cross_edge_bound(6, dv)


def test_clique_pair_examples():
    assert clique_pair_unbalance(split_join(2, 6), 0, 1, range(2)) == 0
    _, g = extremal_split(6, 2, 5)
    assert (g.degree(0), g.degree(1)) == (5, 2)
    assert clique_pair_unbalance(g, 0, 1, range(2)) == 3
    assert clique_pair_unbalance(g, 1, 1, range(2)) == 0


def test_clique_pair_rejects_non_clique():
    with pytest.raises(GraphError):
        clique_pair_unbalance(split_join(2, 6), 0, 3, range(2))


@given(split_graphs())
def test_clique_identity_is_exact(gk):
    g, k = gk
    for u, v in combinations(range(k), 2):
        assert clique_pair_unbalance(g, u, v, range(k)) == edge_unbalance(g, u, v).unbalance


@pytest.mark.parametrize("seq, expected", [([3, 1, 0], 6), ([4, 1], 3), ([2, 2, 2], 0), ([], 0)])
def test_weighted_absdiff_sum(seq, expected):
    assert weighted_absdiff_sum(seq) == expected


def test_weighted_absdiff_sum_requires_sorted():
    with pytest.raises(ValueError):
        weighted_absdiff_sum([1, 3])


@given(st.lists(st.integers(0, 20), max_size=8))
def test_weighted_sum_matches_pairwise(seq):
    seq = sorted(seq, reverse=True)
    assert weighted_absdiff_sum(seq) == sum(a - b for a, b in combinations(seq, 2))


# --- degree-gap maximisation ----------------------------------------------------


@pytest.mark.parametrize("n, k, m, expected", [(6, 2, 8, 0), (6, 2, 5, F(15, 4)), (6, 2, 0, 0)])
def test_claim3_bound(n, k, m, expected):
    assert claim3_bound(n, k, m) == expected


def test_claim3_extremal_examples():
    e = claim3_extremal_value(6, 2, 5)
    assert (e.value, e.r, e.s, e.slack) == (3, 1, 1, F(3, 4))
    e = claim3_extremal_value(6, 2, 8)
    assert (e.value, e.r, e.s, e.slack) == (0, 2, 0, 0)


def test_claim3_matches_extremal_graph():
    spec, _ = extremal_split(6, 2, 5)
    assert weighted_absdiff_sum(spec.cross_degrees) == claim3_extremal_value(6, 2, 5).value


@pytest.mark.parametrize("args", [(6, 2, 9), (6, 7, 0), (6, 2, -1)])
def test_claim3_range_errors(args):
    with pytest.raises(ValueError):
        claim3_bound(*args)


def test_claim3_brute_force_small():
    for k in range(1, 5):
        for w in range(1, 5):
            best: dict[int, int] = {}
            for seq in product(range(w + 1), repeat=k):
                seq = sorted(seq, reverse=True)
                m = sum(seq)
                best[m] = max(best.get(m, 0), weighted_absdiff_sum(seq))
            for m, value in best.items():
                e = claim3_extremal_value(k + w, k, m)
                assert e.value == value
                assert e.slack == F(e.s * (w - e.s), w)
                if e.s == 0:
                    assert e.slack == 0


# --- g, m* and the piecewise bound ------------------------------------------------


def test_g_bound_examples():
    assert g_bound(6, 2, 8) == 24 == mostar_index(split_join(2, 6))
    assert g_bound(6, 2, 7) == F(49, 2)
    assert g_bound(6, 2, 0) == 0
    assert m_star(6, 2) == 7


@pytest.mark.parametrize("n", range(3, 25))
def test_g_peaks_at_rounded_m_star(n):
    for k in range(1, n):
        values = [g_bound(n, k, m) for m in range(k * (n - k) + 1)]
        top = max(values)
        ms = m_star(n, k)
        candidates = [min(math.floor(ms), k * (n - k)), min(math.ceil(ms), k * (n - k))]
        assert top in [values[m] for m in candidates]


def test_piecewise_examples():
    low = theorem2_piecewise(6, 1)
    assert (low.case_taken, low.piecewise_value) == (SplitCase.LOW, 20)
    high = theorem2_piecewise(6, 2)
    assert (high.case_taken, high.piecewise_value) == (SplitCase.HIGH, F(49, 2))
    assert high.cap_value == 32 and high.ordered


def test_piecewise_with_m_carries_g():
    chain = theorem2_piecewise(6, 2, 5)
    assert chain.g_value == g_bound(6, 2, 5)
    assert chain.m == 5 and chain.ordered


def test_piecewise_low_case_is_split_join_value():
    for n in range(2, 40):
        for k in range(1, n):
            if 3 * k <= n - 1:
                assert theorem2_piecewise(n, k).piecewise_value == mo_split_join(k, n)


@pytest.mark.parametrize("n", range(2, 60))
def test_piecewise_dominates_g_and_below_cap(n):
    for k in range(1, n):
        chain = theorem2_piecewise(n, k)
        for m in range(k * (n - k) + 1):
            assert g_bound(n, k, m) <= chain.piecewise_value
        assert chain.piecewise_value <= cap(n)


def test_degenerate_clique_sizes():
    assert g_bound(5, 0, 0) == 0
    assert g_bound(5, 5, 0) == 0
    with pytest.raises(ValueError):
        g_bound(5, 5, 1)
    assert theorem2_piecewise(5, 0).ordered


def test_scalar_envelope():
    assert scalar_envelope(F(1, 3)) == F(4, 27)
    grid = [F(t, 3000) for t in range(3001)]
    assert max(scalar_envelope(a) for a in grid) == F(4, 27)
    assert all(scalar_envelope(a / 1000) <= 4 / 27 + 1e-15 for a in range(1001))


# --- whole-graph audit ------------------------------------------------------------


def test_audit_split_join():
    audit = audit_split_graph(split_join(2, 6), 2)
    assert audit.ok
    assert (audit.mostar, audit.m, audit.chain.g_value) == (24, 8, 24)


def test_audit_extremal_split():
    audit = audit_split_graph(extremal_split(6, 2, 5)[1], 2)
    assert audit.ok
    assert audit.clique_gap_sum == 3
    assert audit.claim3 == F(15, 4)


def test_audit_rejects_non_split_labelling():
    with pytest.raises(GraphError):
        audit_split_graph(from_edge_list(3, [(0, 1)]), 3)
    with pytest.raises(GraphError):
        audit_split_graph(from_edge_list(4, [(0, 1), (2, 3)]), 1)


@given(split_graphs())
@settings(max_examples=200, deadline=None)
def test_audit_chain_holds(gk):
    g, k = gk
    audit = audit_split_graph(g, k)
    assert audit.ok, audit.violations
    assert audit.mostar == mostar_index(g)
    assert audit.cs_slack >= 0
