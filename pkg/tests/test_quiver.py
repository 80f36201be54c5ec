import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import quivers, vectors
from quiverbn.quiver import (Arrow, Quiver, a1, a_n, arrow_count, builtin, cartan, double,
                             framed, jordan, k0, repetition, sub_checked)


def path3():
    return Quiver(("a", "b", "c"), (Arrow("x", "a", "b"), Arrow("y", "c", "b")))


def test_cartan_small_cases():
    assert cartan(jordan()).tolist() == [[0]]
    assert cartan(a1()).tolist() == [[2]]
    assert cartan(a_n(3)).tolist() == [[2, -1, 0], [-1, 2, -1], [0, -1, 2]]
    two_loops = Quiver(("0",), (Arrow("x", "0", "0"), Arrow("y", "0", "0")))
    assert cartan(two_loops).tolist() == [[-2]]


def test_parallel_arrows_count():
    q = Quiver(("u", "w"), (Arrow("p", "u", "w"), Arrow("q", "u", "w"), Arrow("r", "w", "u")))
    assert arrow_count(q, "u", "w") == 2
    assert cartan(q).tolist() == [[2, -3], [-3, 2]]


def test_k0_values():
    assert k0(jordan(), 5, 1).tolist() == [-1]
    assert k0(jordan(), 3, 4).tolist() == [-4]
    for d in range(5):
        for f in range(6):
            assert k0(a1(), d, f).tolist() == [2 * d - f]


def test_double_and_framed():
    q = double(jordan())
    assert [a.id for a in q.arrows] == ["x", "x*"]
    assert q.arrows[1] == Arrow("x*", "0", "0")
    fr = framed(a_n(2))
    assert fr.n == 4
    assert fr.framing == frozenset({"[1]", "[2]"})
    assert Arrow("i:1", "[1]", "1") in fr.arrows


def test_repetition_counts_from_examples():
    r = repetition(a1(), 1, "framed")
    assert (r.n, len(r.arrows)) == (3, 5)
    r = repetition(path3(), 2, "plain")
    assert (r.n, len(r.arrows)) == (9, 12)
    assert "p:a@0" in {a.id for a in r.arrows}
    assert "x@2" in {a.id for a in r.arrows}


def test_framed_double_doubles_levels_only():
    r = repetition(jordan(), 2, "framed_double")
    ids = {a.id for a in r.arrows}
    assert {"x@0", "x*@0", "x*@2", "p:0@1"} <= ids
    assert not any(i.startswith("p:") and "*" in i for i in ids)


@given(quivers(), st.integers(0, 3))
def test_repetition_plain_sizes(q, ell):
    r = repetition(q, ell)
    assert r.n == q.n * (ell + 1)
    assert len(r.arrows) == len(q.arrows) * (ell + 1) + q.n * ell


@given(quivers())
def test_cartan_symmetric_with_even_diagonal(q):
    c = cartan(q)
    assert np.array_equal(c, c.T)
    assert all(x % 2 == 0 for x in np.diag(c))


@given(quivers(), st.data())
def test_k0_shift_identity(q, data):
    d = data.draw(vectors(q.n))
    k = np.array([data.draw(st.integers(0, int(x))) for x in d])
    f = data.draw(vectors(q.n))
    assert np.array_equal(k0(q, d - k, f), k0(q, d, f) - cartan(q) @ k)


def test_vector_coercion():
    q = a_n(3)
    assert q.vector({"2": 4}).tolist() == [0, 4, 0]
    assert q.vector([1, 2, 3]).tolist() == [1, 2, 3]
    assert jordan().vector(3).tolist() == [3]
    with pytest.raises(ValueError):
        q.vector([1, 2])
    with pytest.raises(ValueError):
        q.vector(3)
    with pytest.raises(ValueError):
        q.vector({"nope": 1})


def test_bad_quivers_rejected():
    with pytest.raises(ValueError):
        Quiver(("a", "a"))
    with pytest.raises(ValueError):
        Quiver(("a",), (Arrow("x", "a", "b"),))
    with pytest.raises(ValueError):
        Quiver(("a",), (Arrow("x", "a", "a"), Arrow("x", "a", "a")))
    with pytest.raises(ValueError):
        repetition(a1(), -1)
    with pytest.raises(ValueError):
        sub_checked(np.array([1]), np.array([2]))


def test_builtin_names():
    assert builtin("jordan") == jordan()
    assert builtin("a3") == a_n(3)
    assert cartan(builtin("loops2")).tolist() == [[-2]]
    assert arrow_count(builtin("kronecker3"), "0", "1") == 3
    with pytest.raises(ValueError):
        builtin("e8")
