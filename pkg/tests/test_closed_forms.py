from fractions import Fraction
from itertools import product
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrspec.arrangement import Arrangement, ArrangementError
from arrspec.examples import generic
from arrspec.lattice import build
from arrspec.spectrum import spectrum_n3, spectrum_n4_low
from arrspec.wonderful.closed_forms import (chi_closed_n3, chi_closed_n4, chi_closed_n4_checked,
                                            chi_line_bundle, chi_ring_hrr_n4, chi_ring_n4,
                                            incidence_n4, nnc_of_codim)
from arrspec.wonderful.hrr import HRREngine
from oracles import arrangements


def cdiv(a, b):
    return -(-a // b)


def test_phi_at_zero(m7_lat):
    pts = nnc_of_codim(m7_lat, 2)
    assert chi_closed_n3(m7_lat, [0] * len(pts), 0) == (1, 6)
    assert chi_closed_n3(m7_lat, [0] * len(pts), -3)[0] == 1


def test_phi_argument_checks(m7_lat, n4_lat):
    with pytest.raises(ValueError):
        chi_closed_n3(m7_lat, [0], 0)
    with pytest.raises(ArrangementError):
        chi_closed_n3(n4_lat, [], 0)
    with pytest.raises(ArrangementError):
        chi_closed_n4(m7_lat, [], [], 0)


@given(arrangements(3, dmax=8))
def test_plane_substitution_gives_spectrum(arr):
    # alpha = i/d: A_j = 2 - ceil(i m_j/d), C = i - 3, coefficient Phi0.
    # alpha = i/d + 1: A_j = m_j - ceil(i m_j/d), C = i - d, coefficient -Phi1.
    lat = build(arr)
    d = arr.d
    pts = nnc_of_codim(lat, 2)
    table = spectrum_n3(lat)
    for i in range(1, d + 1):
        low = [2 - cdiv(i * v.mu, d) for v in pts]
        assert chi_closed_n3(lat, low, i - 3)[0] == table[Fraction(i, d)]
        mid = [v.mu - cdiv(i * v.mu, d) for v in pts]
        assert -chi_closed_n3(lat, mid, i - d)[1] == table[Fraction(i, d) + 1]


@given(arrangements(3, dmax=7), st.data())
def test_plane_forms_match_riemann_roch(arr, data):
    lat = build(arr)
    eng = HRREngine(arr, lat)
    pts = nnc_of_codim(lat, 2)
    small = st.integers(-4, 4)
    A = [data.draw(small) for _ in pts]
    C = data.draw(small)
    coeffs = dict(zip(pts, A))
    assert chi_closed_n3(lat, A, C) == (chi_line_bundle(eng, coeffs, C, 0),
                                         chi_line_bundle(eng, coeffs, C, 1))


def test_n4_hyperplane_twists(n4_lat):
    for C in range(-6, 6):
        want = (C + 3) * (C + 2) * (C + 1) // 6
        assert chi_closed_n4(n4_lat, [0], [0, 0], C) == want


def test_n4_box_agreement(n4_lat):
    lines, pts, _ = incidence_n4(n4_lat)
    assert (len(lines), len(pts)) == (1, 2)
    box = range(-5, 6)
    for a, b1, b2, c in product(box, repeat=4):
        assert chi_closed_n4(n4_lat, [a], [b1, b2], c) == chi_ring_n4(n4_lat, [a], [b1, b2], -c)


def test_n4_checked_raises_nothing_on_demo(n4_lat):
    assert chi_closed_n4_checked(n4_lat, [1], [2, -1], 3) == chi_closed_n4(n4_lat, [1], [2, -1], 3)


@settings(max_examples=60)
@given(st.lists(st.integers(-3, 3), min_size=4, max_size=4))
def test_ring_form_matches_riemann_roch(n4, n4_lat, abc):
    eng = HRREngine(n4, n4_lat)
    a, b1, b2, c = abc
    assert chi_ring_hrr_n4(eng, [a], [b1, b2], c) == chi_ring_n4(n4_lat, [a], [b1, b2], c)


def test_n4_substitution_gives_spectrum(n4, n4_lat):
    d = n4.d
    lines, pts, _ = incidence_n4(n4_lat)
    table = spectrum_n4_low(n4_lat)
    for i in range(1, d + 1):
        A = [2 - cdiv(i * v.mu, d) for v in lines]
        B = [3 - cdiv(i * v.mu, d) for v in pts]
        assert chi_closed_n4(n4_lat, A, B, i - 4) == table[Fraction(i, d)]
    assert chi_closed_n4(n4_lat, [2 - cdiv(15, 5)], [3 - cdiv(20, 5)] * 2, 1) == 2


@settings(max_examples=15)
@given(arrangements(4, dmax=7))
def test_n4_substitution_random(arr):
    lat = build(arr)
    d = arr.d
    lines, pts, _ = incidence_n4(lat)
    table = spectrum_n4_low(lat)
    for i in range(1, d + 1):
        A = [2 - cdiv(i * v.mu, d) for v in lines]
        B = [3 - cdiv(i * v.mu, d) for v in pts]
        assert chi_closed_n4_checked(lat, A, B, i - 4) == table[Fraction(i, d)]


def test_line_bundle_rejects_foreign_edge(m7, m7_lat):
    eng = HRREngine(m7, m7_lat)
    double = next(e for e in m7_lat.of_codim(2) if not e.is_nnc)
    with pytest.raises(ValueError):
        chi_line_bundle(eng, {double: 1})


def test_generic_plane_phi():
    lat = build(generic(3, 6))
    assert nnc_of_codim(lat, 2) == []
    for C in range(-4, 5):
        phi0, phi1 = chi_closed_n3(lat, [], C)
        assert phi0 == (C + 2) * (C + 1) // 2
        assert phi1 == C * C + 6 * C + 5
