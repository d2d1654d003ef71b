import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrspec.arrangement import (Arrangement, ArrangementError, parse_arrangement, quotient, reduce,
                                 serialize, validate)
from arrspec.lattice import build
from oracles import arrangements


def record(n, normals, mults=None):
    mults = mults or [1] * len(normals)
    return json.dumps({"n": n, "hyperplanes": [{"normal": [str(x) for x in v], "mult": m}
                                               for v, m in zip(normals, mults)]})


def test_parse_coordinate_arrangement():
    arr = parse_arrangement(record(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert (arr.n, arr.d, arr.d_red) == (3, 3, 3)


def test_parse_normalizes_rationals(m7):
    text = json.dumps({"n": 3, "hyperplanes": [{"normal": ["1/2", "-1/2", "0"], "mult": 1}]})
    assert parse_arrangement(text).normals == [(1, -1, 0)]
    assert parse_arrangement(record(3, [list(v) for v in m7.normals])).d == 7


def test_parse_keeps_order():
    arr = parse_arrangement(record(2, [[0, 1], [1, 0]]))
    assert arr.normals == [(0, 1), (1, 0)]


@pytest.mark.parametrize("text,msg", [
    (record(3, [[0, 0, 0]]), "zero normal"),
    (record(3, [[1, 0]]), "dimension mismatch"),
    (record(2, [[1, 2], [-2, -4]]), "duplicate"),
    (json.dumps({"n": 2, "hyperplanes": [{"normal": ["1.5", "1"]}]}), "malformed rational"),
    (json.dumps({"n": 2, "hyperplanes": [{"normal": ["1", "1"], "mult": 0}]}), "multiplicity"),
    ("{not json", "malformed record"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ArrangementError, match=msg):
        parse_arrangement(text)


@given(arrangements(3, dmin=1, essential=False, mults=True))
def test_serialize_round_trip(arr):
    assert parse_arrangement(serialize(arr)) == arr
    assert serialize(parse_arrangement(serialize(arr))) == serialize(arr)


def test_validate_examples(m7):
    rep = validate(Arrangement.from_normals(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert rep.essential and any("deg D_red <= n" in w for w in rep.warnings)
    rep = validate(m7)
    assert rep.essential and rep.warnings == () and rep.d == 7
    rep = validate(Arrangement.from_normals(3, [[1, 0, 0], [0, 1, 0]]))
    assert not rep.essential


def test_reduce():
    arr = Arrangement.from_normals(2, [[1, 0], [0, 1], [1, 1]], [2, 1, 3])
    assert reduce(arr).mults == [1, 1, 1]
    assert reduce(arr).d == 3
    assert reduce(reduce(arr)) == reduce(arr)


def test_reduce_fixes_reduced(m7):
    assert reduce(m7) == m7


def test_quotient_at_origin_is_identity(m7_lat, m7):
    q = quotient(m7, m7_lat.origin)
    assert q == m7


def test_quotient_at_triple_and_double_lines(m7, m7_lat):
    x_axis = m7_lat.edge_for([4, 5, 6])  # y-z, y+z, z
    q = quotient(m7, x_axis)
    assert (q.n, q.d, q.d_red) == (2, 3, 3) and q.is_essential
    double = m7_lat.edge_for([0, 1])  # x-y, x+y
    q = quotient(m7, double)
    assert (q.n, q.d) == (2, 2)


def test_quotient_rejects_foreign_edge(m7, n4_lat):
    with pytest.raises(ArrangementError):
        quotient(m7, n4_lat.origin)


@given(arrangements(3, dmax=6, mults=True))
def test_quotient_sizes(arr):
    lat = build(arr)
    for v in lat.edges:
        q = quotient(arr, v)
        assert q.d_red == v.mu_red and q.d == v.mu and q.n == v.gamma and q.is_essential
