import pytest
from hypothesis import given
from hypothesis import strategies as st

from mostar.families import (
    ALPHA1,
    SplitSpec,
    best_complete_bipartite,
    complete_bipartite,
    extremal_split,
    mo_complete_bipartite,
    mo_split_join,
    split_from_spec,
    split_join,
)
from mostar.graph_core import GraphError, from_edge_list, mostar_index


def test_complete_bipartite_shapes():
    g = complete_bipartite(2, 4)
    assert (g.n, g.m) == (6, 8)
    assert all(u < 2 <= v for u, v in g.edges)
    assert complete_bipartite(0, 3) == from_edge_list(3, [])
    assert complete_bipartite(1, 1).edges == ((0, 1),)


@pytest.mark.parametrize("a, b, expected", [(2, 4, 16), (3, 3, 0), (1, 5, 20), (0, 4, 0)])
def test_mo_complete_bipartite(a, b, expected):
    assert mo_complete_bipartite(a, b) == expected
    assert mostar_index(complete_bipartite(a, b)) == expected


def test_split_join_shapes():
    assert split_join(2, 6).m == 1 + 8
    assert split_join(1, 4) == complete_bipartite(1, 3)
    k5 = split_join(5, 5)
    assert k5.m == 10


@pytest.mark.parametrize("k, n, expected", [(2, 6, 24), (1, 4, 6), (5, 5, 0), (0, 3, 0)])
def test_mo_split_join(k, n, expected):
    assert mo_split_join(k, n) == expected
    assert mostar_index(split_join(k, n)) == expected


def test_split_join_rejects_bad_k():
    with pytest.raises(GraphError):
        split_join(4, 3)


@pytest.mark.parametrize(
    "n, k, m, degs",
    [(6, 2, 8, (4, 4)), (6, 2, 5, (4, 1)), (6, 2, 0, (0, 0)), (7, 3, 5, (4, 1, 0))],
)
def test_extremal_split_degrees(n, k, m, degs):
    spec, g = extremal_split(n, k, m)
    assert spec.cross_degrees == degs
    assert spec.m == m
    assert g.m == k * (k - 1) // 2 + m


def test_extremal_split_full_is_split_join():
    _, g = extremal_split(6, 2, 8)
    assert g == split_join(2, 6)


def test_extremal_split_r_s():
    spec, _ = extremal_split(6, 2, 5)
    assert (spec.r, spec.s) == (1, 1)
    spec, _ = extremal_split(6, 2, 8)
    assert (spec.r, spec.s) == (2, 0)


def test_extremal_split_partial_vertex_takes_first_independent_vertices():
    _, g = extremal_split(8, 3, 7)
    # r = 1 universal clique vertex, then clique vertex 1 sees s = 2 vertices
    assert [v for v in g.adjacency[1] if v >= 3] == [3, 4]


def test_extremal_split_range_error():
    with pytest.raises(GraphError):
        extremal_split(6, 2, 9)
    with pytest.raises(GraphError):
        extremal_split(6, 2, -1)


def test_split_from_spec_examples():
    spec, g = extremal_split(6, 2, 5)
    assert split_from_spec(spec).m == 6
    assert split_from_spec(SplitSpec(6, 2, (4, 4))) == split_join(2, 6)
    with pytest.raises(GraphError):
        SplitSpec(6, 2, (5, 0))


@pytest.mark.parametrize(
    "args",
    [(6, 2, (1, 3)), (6, 2, (1,)), (3, 4, ()), (6, 2, (1, 1), "random")],
)
def test_split_spec_validation(args):
    with pytest.raises(GraphError):
        SplitSpec(*args)


@st.composite
def split_specs(draw):
    n = draw(st.integers(1, 12))
    k = draw(st.integers(0, n))
    degs = sorted(draw(st.lists(st.integers(0, n - k), min_size=k, max_size=k)), reverse=True)
    return SplitSpec(n, k, tuple(degs))


@given(split_specs())
def test_split_from_spec_realises_degrees(spec):
    g = split_from_spec(spec)
    k = spec.k
    for c in range(k):
        assert sum(1 for v in g.adjacency[c] if v >= k) == spec.cross_degrees[c]
        assert all(w in g.adjacency[c] for w in range(k) if w != c)
    for v in range(k, spec.n):
        assert all(w < k for w in g.adjacency[v])
    ind = [g.degree(v) for v in range(k, spec.n)]
    if ind:
        assert max(ind) - min(ind) <= 1


@st.composite
def split_params(draw):
    n = draw(st.integers(1, 12))
    k = draw(st.integers(0, n))
    return n, k, draw(st.integers(0, k * (n - k)))


@given(split_params())
def test_extremal_split_sequence_shape(nkm):
    n, k, m = nkm
    spec, g = extremal_split(n, k, m)
    width = n - k
    cross = g.m - k * (k - 1) // 2
    assert cross == m
    if width:
        r, s = divmod(m, width)
        expected = [width] * r + ([s] if r < k else []) + [0] * max(k - r - 1, 0)
        assert list(spec.cross_degrees) == expected
        ind = [g.degree(v) for v in range(k, n)]
        assert max(ind) - min(ind) <= 1


def test_closed_forms_all_small_orders():
    for a in range(13):
        for b in range(13):
            assert mo_complete_bipartite(a, b) == mostar_index(complete_bipartite(a, b))
    for n in range(13):
        for k in range(n + 1):
            assert mo_split_join(k, n) == mostar_index(split_join(k, n))


@pytest.mark.parametrize("n, expected", [(6, (1, 20)), (2, (1, 0)), (3, (1, 2))])
def test_best_complete_bipartite(n, expected):
    assert best_complete_bipartite(n) == expected


def test_best_complete_bipartite_tracks_alpha1():
    for n in (50, 97, 200, 1000):
        a, value = best_complete_bipartite(n)
        assert a in (int(ALPHA1 * n), int(ALPHA1 * n) + 1)
        assert value == max(x * (n - x) * (n - 2 * x) for x in range(1, n // 2 + 1))


def test_best_complete_bipartite_rejects_tiny():
    with pytest.raises(ValueError):
        best_complete_bipartite(1)


def test_alpha1_value():
    assert ALPHA1 == pytest.approx(0.21132, abs=1e-5)
