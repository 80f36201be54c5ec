import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quiverbn import gallery, reps, serialize
from quiverbn import linalg as la
from quiverbn.quiver import a_n, jordan


def test_parse_vector_forms():
    q = a_n(2)
    assert serialize.parse_vector(q, "1=3,2=2").tolist() == [3, 2]
    assert serialize.parse_vector(q, "3,2").tolist() == [3, 2]
    assert serialize.parse_vector(q, '{"2": 5}').tolist() == [0, 5]
    assert serialize.parse_vector(q, "").tolist() == [0, 0]
    assert serialize.parse_vector(jordan(), "4").tolist() == [4]
    for bad in ("3", "1=3,2", "x"):
        with pytest.raises(ValueError):
            serialize.parse_vector(q, bad)


def test_quiver_round_trip(tmp_path):
    q = a_n(3)
    path = tmp_path / "q.json"
    path.write_text(serialize.dumps(serialize.quiver_to_json(q)))
    assert serialize.load_quiver(str(path)) == q
    assert serialize.load_quiver("jordan") == jordan()
    with pytest.raises(ValueError):
        serialize.quiver_from_json({"arrows": []})


def test_rationals_are_strings():
    rep = gallery.hilb_distinct_points([("1/2", 0), (1, 1)])
    data = serialize.rep_to_json(rep)
    assert data["A"]["x"] == [["1/2", "0"], ["0", "1"]]
    assert serialize.rep_from_json(json.loads(json.dumps(data))).A["x"][0, 0] == la.rational("1/2")


@given(st.sampled_from(gallery.FAMILIES), st.integers(0, 10**6))
@settings(max_examples=25)
def test_point_and_chain_round_trip(family, seed):
    pt = gallery.random_gallery_point(family, seed, max_size=4)
    back = serialize.load_object(json.loads(serialize.dumps(serialize.point_to_json(pt))))
    assert isinstance(back, reps.ParabolicPoint)
    assert serialize.point_to_json(back) == serialize.point_to_json(pt)
    ch = reps.chain_from_flag(pt)
    data = serialize.chain_to_json(ch)
    again = serialize.load_object(json.loads(serialize.dumps(data)))
    assert serialize.chain_to_json(again) == data
    assert reps.validate_chain(again).ok


def test_load_object_plain_rep():
    rep = gallery.hilb_fixed_point((2,))
    assert isinstance(serialize.load_object(serialize.rep_to_json(rep)), reps.FramedRep)


def test_malformed_matrices():
    data = serialize.rep_to_json(gallery.hilb_fixed_point((2,)))
    data["A"]["x"] = [["1"]]
    with pytest.raises(ValueError):
        serialize.rep_from_json(data)
    data = serialize.rep_to_json(gallery.hilb_fixed_point((2,)))
    del data["d"]
    with pytest.raises(ValueError):
        serialize.rep_from_json(data)
