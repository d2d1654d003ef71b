from fractions import Fraction
from math import factorial

import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from arrspec.numbers import Series, binom, ceil_frac, exp_series, floor_frac, todd_series


@given(st.integers(-30, 30), st.integers(0, 6))
def test_binom_is_the_polynomial_binomial(x, k):
    assert binom(x, k) == sp.ff(x, k) / sp.factorial(k)


def test_binom_special_values():
    assert binom(-1, 2) == 1
    assert binom(5, 2) == 10
    assert binom(2, 3) == 0
    assert binom(4, -1) == 0


@given(st.fractions(max_denominator=40))
def test_floor_ceil(x):
    assert floor_frac(x) == sp.floor(sp.Rational(x.numerator, x.denominator))
    assert ceil_frac(x) == sp.ceiling(sp.Rational(x.numerator, x.denominator))


def test_todd_series_bernoulli_vector():
    # x/(1-e^-x) = 1 + x/2 + x^2/12 - x^4/720 + x^6/30240 - ...
    want = [1, Fraction(1, 2), Fraction(1, 12), 0, Fraction(-1, 720), 0, Fraction(1, 30240)]
    assert todd_series(6).coeffs == want


def test_todd_series_via_bernoulli_numbers():
    # even coefficients are (-1)^(k-1) B_k / (2k)! with B_1 = 1/6, B_2 = 1/30, B_3 = 1/42
    q = todd_series(6).coeffs
    for k, b in ((1, Fraction(1, 6)), (2, Fraction(1, 30)), (3, Fraction(1, 42))):
        assert q[2 * k] == (-1) ** (k - 1) * b / factorial(2 * k)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=6).filter(lambda c: c[0] != 0), st.integers(-3, 3))
def test_series_power_and_inverse(coeffs, e):
    s = Series(coeffs, 5)
    assert s * s.inverse() == Series([1], 5)
    assert s ** e * s ** (-e) == Series([1], 5)


def test_exp_series_is_a_homomorphism():
    assert exp_series(5, Fraction(2)) == exp_series(5) * exp_series(5)
