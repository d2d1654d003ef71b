from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrspec.arrangement import Arrangement, ArrangementError
from arrspec.examples import generic
from arrspec.jumping import ONE_IS_JUMPING, jc_cor1, jc_cor2, jc_unit_interval
from arrspec.lattice import build
from oracles import arrangements

F = Fraction


def test_mustata(m7, m7_lat):
    rep = jc_unit_interval(m7, m7_lat)
    assert F(5, 7) not in rep.as_set and F(2, 3) in rep.as_set
    assert rep.as_set == {F(3, 7), F(4, 7), F(2, 3), F(6, 7)}
    w = rep.witnesses[F(2, 3)]
    assert w.edge.gamma == 2 and w.edge.mu == 3 and w.value == 1
    assert jc_cor1(m7_lat).as_set == rep.as_set


def test_n4_demo(n4, n4_lat):
    assert jc_unit_interval(n4, n4_lat).as_set == {F(2, 3)}
    assert jc_cor2(n4_lat).as_set == {F(2, 3)}


@pytest.mark.parametrize("d", range(2, 10))
def test_plane_lines(d):
    arr = Arrangement.from_normals(2, [[1, t] for t in range(d)])
    assert jc_unit_interval(arr).as_set == {F(i, d) for i in range(2, d)}


def test_plane_rule_generic():
    for d in (4, 5, 7):
        lat = build(generic(3, d, seed=d))
        assert jc_cor1(lat).as_set == {F(i, d) for i in range(3, d)}
    assert jc_cor1(build(generic(3, 4))).as_set == {F(3, 4)}


def test_space_rule_generic():
    lat = build(generic(4, 7, seed=1))
    assert jc_cor2(lat).as_set == {F(i, 7) for i in range(4, 7)}


def test_space_rule_quadruple_codim2_edge():
    # four planes through {x = y = 0} plus two more planes
    arr = Arrangement.from_normals(4, [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [1, -1, 0, 0],
                                       [0, 0, 1, 0], [0, 0, 0, 1]])
    rep = jc_cor2(build(arr))
    assert {F(2, 4), F(3, 4)} <= rep.as_set
    assert rep.as_set == jc_unit_interval(arr).as_set


def test_corollary_preconditions(m7_lat, n4_lat):
    with pytest.raises(ArrangementError):
        jc_cor1(n4_lat)
    with pytest.raises(ArrangementError):
        jc_cor2(m7_lat)


def test_multiple_component_base_case():
    # f = x^3 y: the component x has multiplicity 3, giving 1/3 and 2/3
    arr = Arrangement.from_normals(2, [[1, 0], [0, 1]], [3, 1])
    rep = jc_unit_interval(arr)
    assert rep.as_set == {F(1, 3), F(2, 3)}
    assert all(rep.witnesses[a].edge.gamma == 1 for a in rep.coefficients)


def test_one_is_reported_separately(m7):
    rep = jc_unit_interval(m7)
    assert ONE_IS_JUMPING and F(1) not in rep.as_set
    assert rep.to_record()["one_is_jumping"] is True


@given(arrangements(3, dmax=8))
def test_plane_rule_equals_unit_interval(arr):
    lat = build(arr)
    assert jc_cor1(lat).as_set == jc_unit_interval(arr, lat).as_set


@given(arrangements(4, dmax=7))
def test_space_rule_equals_unit_interval(arr):
    lat = build(arr)
    assert jc_cor2(lat).as_set == jc_unit_interval(arr, lat).as_set


@given(arrangements(3, dmax=6, mults=True))
def test_witnesses_certify(arr):
    rep = jc_unit_interval(arr)
    for a in rep.coefficients:
        w = rep.witnesses[a]
        assert 0 < a < 1 and (a * w.edge.mu).denominator == 1 and w.value > 0


@given(arrangements(3, dmax=7), st.sampled_from([[[1, 1, 0], [0, 1, 0], [0, 0, 1]],
                                                 [[2, 0, 1], [1, 1, 0], [0, -1, 1]]]))
def test_invariant_under_coordinate_change(arr, matrix):
    a = jc_unit_interval(arr)
    b = jc_unit_interval(arr.transform(matrix))
    assert a.serialize(False) == b.serialize(False)
