import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import quiver_chain
from quiverbn import dims
from quiverbn.quiver import Arrow, Quiver, a1, a_n, jordan, k0, loops
from quiverbn.roots import (RootGraph, RootKind, StrataOverflow, bn_nonempty, framed_graph,
                            graph_of, is_positive_root, nakajima_nonempty, parabolic_nonempty,
                            parabolic_nonempty_trace, strata_table)

J, A1 = jordan(), a1()


def graph(n, edges, loop_counts=None):
    m = np.zeros((n, n), dtype=np.int64)
    for a, b in edges:
        m[a, b] += 1
        m[b, a] += 1
    return RootGraph(tuple(str(t) for t in range(n)), m, np.array(loop_counts or [0] * n))


DYNKIN = {
    "A4": graph(4, [(0, 1), (1, 2), (2, 3)]),
    "D4": graph(4, [(0, 1), (0, 2), (0, 3)]),
    "D5": graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)]),
}


def tits(g, alpha):
    a = np.array(alpha)
    return int(a @ g.cartan() @ a) // 2


@pytest.mark.parametrize("name", sorted(DYNKIN))
def test_dynkin_roots_are_tits_form_one(name):
    g = DYNKIN[name]
    for alpha in itertools.product(range(3), repeat=len(g.vertices)):
        if any(alpha):
            v = is_positive_root(g, alpha)
            assert v.is_root == (tits(g, alpha) == 1), alpha
            assert v.kind in (RootKind.REAL, RootKind.NOT_POSITIVE)


def test_dynkin_root_counts():
    # positive roots of A4 and D4: 10 and 12
    for g, expected in ((DYNKIN["A4"], 10), (DYNKIN["D4"], 12)):
        count = sum(is_positive_root(g, a).is_root
                    for a in itertools.product(range(3), repeat=4) if any(a))
        assert count == expected


def test_affine_triangle():
    g = graph(3, [(0, 1), (1, 2), (2, 0)])
    for alpha in itertools.product(range(4), repeat=3):
        if any(alpha):
            q = tits(g, alpha)
            v = is_positive_root(g, alpha)
            assert v.is_root == (q <= 1)
            if v.is_root:
                assert v.kind is (RootKind.IMAGINARY if q == 0 else RootKind.REAL)


def test_loop_vertex_simple_roots_are_imaginary():
    g = graph_of(loops(1))
    for n in range(1, 5):
        assert is_positive_root(g, [n]).kind is RootKind.IMAGINARY
    assert is_positive_root(graph(1, []), [2]).kind is RootKind.NOT_POSITIVE


def test_disconnected_support_rejected():
    g = graph(3, [(0, 1), (1, 2)])
    v = is_positive_root(g, [1, 0, 1])
    assert v.kind is RootKind.NOT_POSITIVE and v.trace == []


def test_trace_heights_decrease():
    g = framed_graph(J, 1)
    v = is_positive_root(g, [5, 1])
    heights = [sum(a) for _, a in v.trace]
    assert heights == sorted(heights, reverse=True)
    assert v.kind is RootKind.IMAGINARY and v.final == (5, 1)
    v = is_positive_root(framed_graph(A1, 3), [2, 1])
    assert v.trace == [("1", (1, 1))] and v.kind is RootKind.IMAGINARY


def test_root_input_errors():
    g = DYNKIN["A4"]
    with pytest.raises(ValueError):
        is_positive_root(g, [0, 0, 0, 0])
    with pytest.raises(ValueError):
        is_positive_root(g, [1, -1, 0, 0])
    with pytest.raises(ValueError):
        is_positive_root(g, [1, 1])
    with pytest.raises(ValueError):
        RootGraph(("a", "b"), np.array([[0, 1], [0, 0]]), np.zeros(2))


def test_nakajima_nonempty_closed_forms():
    for f in range(11):
        for d in range(f + 4):
            assert nakajima_nonempty(A1, d, f) == (d <= f)
    for d in range(10):
        assert nakajima_nonempty(J, d, 1)
        assert nakajima_nonempty(J, d, 0) == (d == 0)


def test_an_nonempty_matches_weight_count():
    # equioriented A_2, framed f=(2, 0): nonempty iff 2 >= d1 >= d2
    q = a_n(2)
    for d1, d2 in itertools.product(range(4), repeat=2):
        assert nakajima_nonempty(q, [d1, d2], [2, 0]) == (2 >= d1 >= d2)


def test_hilbert_nonempty():
    for d in range(21):
        for k in range(d + 1):
            assert parabolic_nonempty(J, d, k, 1) == (2 * d >= k * (k + 1))


def test_nonempty_trace():
    v = parabolic_nonempty_trace(J, 2, 2, 1)
    assert not v
    assert v.trace[0] == ((2,), (2,)) and v.trace[-1] == ((0,), (1,))
    v = parabolic_nonempty_trace(J, 3, 2, 1)
    assert v and v.trace[-1][1] == (0,)


def test_bn_nonempty_agrees_with_pair():
    for d in range(8):
        for k in range(d + 1):
            assert bn_nonempty(J, d, 1, k) == parabolic_nonempty(J, d, k, 1)
    assert not bn_nonempty(J, 2, 1, 3)


def test_a1_bn_nonempty():
    for f in range(7):
        for d in range(f + 1):
            for k in range(d + 1):
                # BN^k on T*Gr: j has rank d - k' with k' >= max(k, 2d-f), and k' <= d
                assert bn_nonempty(A1, d, f, k)


@given(quiver_chain(max_vertices=3, max_mult=2, top=4))
def test_nonempty_implies_nonnegative_dimension(case):
    q, d, dk, _, f = case
    k = d - dk
    if parabolic_nonempty(q, d, k, f):
        assert dims.dim_parabolic_pair(q, d, k, f) >= 0
    if nakajima_nonempty(q, d, f):
        assert dims.dim_nakajima(q, d, f) >= 0


@given(quiver_chain(max_vertices=3, max_mult=2, top=4))
def test_bn_nonempty_monotone_in_k(case):
    q, d, dk, _, f = case
    k = d - dk
    if bn_nonempty(q, d, f, k):
        for v in range(q.n):
            if k[v]:
                assert bn_nonempty(q, d, f, k - np.eye(q.n, dtype=np.int64)[v])


def test_strata_table_jordan():
    rows = strata_table(J, 3, 1, 0)
    assert [r.r for r in rows] == [(0,), (1,), (2,)]
    assert [r.stratum_dim for r in rows] == [6, 4, 0]
    assert all(r.nonempty for r in rows)
    assert [r.pminus_fiber_dim for r in rows] == [0, 0, 0]


@pytest.mark.parametrize("d", range(1, 9))
def test_strata_preimage_max_at_k(d):
    for k in range(d + 1):
        rows = [r for r in strata_table(J, d, 1, k)]
        for row in rows:
            if row.r == (k,):
                assert row.pminus_preimage_dim == dims.dim_parabolic_pair(J, d, k, 1)
            else:
                assert row.pminus_preimage_dim < dims.dim_parabolic_pair(J, d, k, 1)


def test_strata_table_cap_and_errors():
    q = Quiver(("a", "b", "c"), ())
    with pytest.raises(StrataOverflow):
        strata_table(q, [3, 3, 3], [9, 9, 9], [0, 0, 0], cap=5)
    with pytest.raises(ValueError):
        strata_table(J, 2, 1, 3)


def test_strata_are_lexicographic():
    q = Quiver(("a", "b"), (Arrow("e", "a", "b"),))
    rows = strata_table(q, [2, 2], [3, 1], [0, 0])
    assert [r.r for r in rows] == sorted(r.r for r in rows)
    for row in rows:
        assert row.stratum_dim == dims.dim_bn_stratum(q, [2, 2], [3, 1], row.r)
        assert np.all(np.array(row.r) >= np.maximum(k0(q, [2, 2], [3, 1]), 0))
