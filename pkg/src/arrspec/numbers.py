"""Small exact helpers: extended binomials and truncated power series."""

from __future__ import annotations

from fractions import Fraction
from math import factorial


def binom(x: int, k: int) -> int:
    """x(x-1)...(x-k+1)/k!, valid for every integer x (negative included)."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= x - j
    return num // factorial(k)


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


class Series:
    """Power series in one variable truncated at degree ``order`` (inclusive)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        c = [Fraction(x) for x in coeffs][: order + 1]
        c += [Fraction(0)] * (order + 1 - len(c))
        self.coeffs = c
        self.order = order

    def __mul__(self, other: "Series") -> "Series":
        N = min(self.order, other.order)
        out = [Fraction(0)] * (N + 1)
        for i, a in enumerate(self.coeffs[: N + 1]):
            if a:
                for j in range(N + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return Series(out, N)

    def inverse(self) -> "Series":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = [Fraction(0)] * (self.order + 1)
        inv[0] = 1 / a0
        for k in range(1, self.order + 1):
            s = sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
            inv[k] = -s / a0
        return Series(inv, self.order)

    def __pow__(self, e: int) -> "Series":
        base = self if e >= 0 else self.inverse()
        out = Series([1], self.order)
        for _ in range(abs(e)):
            out = out * base
        return out

    def __eq__(self, other):
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"Series({self.coeffs})"


def exp_series(order: int, scale: Fraction = Fraction(1)) -> Series:
    """exp(scale * x)."""
    return Series([scale ** k / factorial(k) for k in range(order + 1)], order)


def todd_series(order: int) -> Series:
    """Q(x) = x / (1 - exp(-x)), from x = (1 - exp(-x)) Q(x)."""
    # (1 - exp(-x)) / x = sum_k (-1)^k x^k / (k+1)!
    g = Series([Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)], order)
    return g.inverse()


def linear_series(a: Fraction, b: Fraction, order: int) -> Series:
    """a + b x."""
    return Series([a, b], order)
