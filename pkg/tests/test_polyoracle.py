import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrspec.arrangement import Arrangement, ArrangementError
from arrspec.examples import generic
from arrspec.lattice import build
from arrspec.numbers import binom
from arrspec.polyoracle import (IdealSpec, condition_matrix, hom_dim, ideal_dim, independence_rank,
                                monomials, mustata_graded_dim, order_conditions, thm5_coeff, thm5_spec)
from arrspec.linalg import rank
from oracles import arrangements, derivative_ideal_dim, sympy_rank


def test_hom_dim():
    assert hom_dim(3, 2) == 6
    assert hom_dim(5, 0) == 1
    assert hom_dim(4, 1) == 4
    assert hom_dim(3, -1) == 0


def test_point_condition_is_evaluation(m7_lat):
    p = m7_lat.edge_for([4, 5, 6])  # the point [1:0:0]
    cm = order_conditions(p, 1, 2)
    assert len(cm.rows) == 1
    # the only degree-2 monomial not vanishing at [1:0:0] is x^2
    row = cm.rows[0]
    nz = [m for m, c in zip(monomials(3, 2), row) if c]
    assert nz == [(2, 0, 0)]


def test_order_conditions_on_a_plane(n4_lat):
    v = n4_lat.edge_for([0, 1])  # {x = y = 0}
    cm = order_conditions(v, 1, 1)
    # g = ax + by + cz + dw restricted to {x=y=0} vanishes iff c = d = 0
    assert sympy_rank(cm.rows) == 2
    null = [m for m in monomials(4, 1) if m[0] or m[1]]
    assert ideal_dim(IdealSpec(4, 1, ((v, 1),))) == len(null)


def test_order_zero_is_empty(m7_lat):
    assert order_conditions(m7_lat.origin, 0, 3).rows == []
    with pytest.raises(ValueError):
        order_conditions(m7_lat.origin, 1, -1)


def test_ideal_dim_examples(m7, m7_lat):
    assert ideal_dim(IdealSpec(3, 1)) == 3
    spec = thm5_spec(m7, 5, m7_lat)
    assert spec.degree == 2 and sorted(e for _, e in spec.conditions) == [1] * 6
    assert ideal_dim(spec) == 0
    assert thm5_spec(m7, 4, m7_lat).conditions == ()
    assert thm5_coeff(m7, 4) == 3


def test_vanishing_oracle_examples(m7, n4):
    assert thm5_coeff(m7, 5) == 0
    assert thm5_coeff(m7, 7) == 9
    assert thm5_coeff(n4, 5) == 2
    with pytest.raises(ValueError):
        thm5_coeff(m7, 8)


@given(arrangements(3, dmax=6), st.data())
def test_ideal_dim_matches_derivative_oracle_n3(arr, data):
    lat = build(arr)
    edges = [e for e in lat.edges if e.gamma >= 2]
    conds = data.draw(st.lists(st.tuples(st.sampled_from(edges), st.integers(0, 3)), max_size=3,
                               unique_by=lambda c: c[0]))
    degree = data.draw(st.integers(0, 4))
    assert ideal_dim(IdealSpec(3, degree, tuple(conds))) == derivative_ideal_dim(3, degree, conds)


@given(arrangements(4, dmax=6), st.data())
def test_ideal_dim_matches_derivative_oracle_n4(arr, data):
    lat = build(arr)
    conds = data.draw(st.lists(st.tuples(st.sampled_from(lat.edges), st.integers(0, 2)), max_size=3,
                               unique_by=lambda c: c[0]))
    degree = data.draw(st.integers(0, 3))
    assert ideal_dim(IdealSpec(4, degree, tuple(conds))) == derivative_ideal_dim(4, degree, conds)


@given(arrangements(3, dmax=6), st.data())
def test_monotone_in_orders(arr, data):
    lat = build(arr)
    edges = data.draw(st.lists(st.sampled_from(lat.edges), min_size=1, max_size=3, unique=True))
    orders = data.draw(st.lists(st.integers(0, 3), min_size=len(edges), max_size=len(edges)))
    degree = data.draw(st.integers(0, 5))
    base = ideal_dim(IdealSpec(3, degree, tuple(zip(edges, orders))))
    k = data.draw(st.integers(0, len(edges) - 1))
    bigger = list(orders)
    bigger[k] += 1
    assert ideal_dim(IdealSpec(3, degree, tuple(zip(edges, bigger)))) <= base


@given(arrangements(3, dmax=7), st.randoms(use_true_random=False))
def test_row_permutation_invariance(arr, rnd):
    j = arr.d
    spec = thm5_spec(arr, j)
    rows = condition_matrix(spec).rows
    shuffled = list(rows)
    rnd.shuffle(shuffled)
    assert rank(shuffled) == rank(rows)


@given(arrangements(3, dmax=8))
def test_vanishing_oracle_bounds(arr):
    for j in range(1, arr.d + 1):
        assert 0 <= thm5_coeff(arr, j) <= hom_dim(3, j - 3)


@pytest.mark.parametrize("n,d", [(3, 5), (3, 7), (4, 6), (4, 7)])
def test_vanishing_oracle_generic_is_full_dimension(n, d):
    arr = generic(n, d, seed=3)
    for j in range(1, d + 1):
        assert thm5_coeff(arr, j) == hom_dim(n, j - n) == binom(j - 1, n - 1)


def test_mustata_examples(m7):
    g = generic(3, 6, seed=0)
    for deg in range(4):
        assert mustata_graded_dim(g, Fraction(1, 3) - Fraction(1, 100), deg) == hom_dim(3, deg)
    eps = Fraction(1, 1000)
    assert mustata_graded_dim(m7, Fraction(5, 7) - eps, 2) == mustata_graded_dim(m7, Fraction(5, 7), 2)
    below = mustata_graded_dim(m7, Fraction(2, 3) - eps, 2)
    at = mustata_graded_dim(m7, Fraction(2, 3), 2)
    assert below > at


@given(arrangements(3, dmax=6), st.integers(0, 3))
def test_mustata_non_increasing(arr, degree):
    alphas = sorted({Fraction(k, 12) for k in range(1, 13)})
    dims = [mustata_graded_dim(arr, a, degree) for a in alphas]
    assert dims == sorted(dims, reverse=True)


def test_mustata_errors(m7):
    with pytest.raises(ValueError):
        mustata_graded_dim(m7, 0, 1)
    with pytest.raises(ValueError):
        mustata_graded_dim(m7, Fraction(1, 2), -1)


def test_independence_examples(m7, n4):
    assert independence_rank(m7, 5) == (6, 6)
    assert independence_rank(m7, 7) == (6, 6)
    assert independence_rank(m7, 1) == (0, 0)
    with pytest.raises(ArrangementError):
        independence_rank(n4, 3)


@given(arrangements(3, dmax=8))
def test_independence_holds_for_reduced_planes(arr):
    for j in range(1, arr.d + 1):
        r, e = independence_rank(arr, j)
        assert r == e


def test_weighted_plane_arrangement_unit_spectrum_by_oracle():
    # f = x^2 y^3 (x + y): a single point, unit spectrum of a weighted pencil
    arr = Arrangement.from_normals(2, [[1, 0], [0, 1], [1, 1]], [2, 3, 1])
    vals = [thm5_coeff(arr, j) for j in range(1, 7)]
    assert all(v >= 0 for v in vals)
    # at alpha = 1 the forms of degree 4 must be divisible by x y^2
    assert vals[-1] == hom_dim(2, 1)
