"""Characteristic classes on the wonderful model."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from ..numbers import Series, binom, exp_series, todd_series
from .ring import CohomClass, RingPresentation


def evaluate(s: Series, x: CohomClass) -> CohomClass:
    """s(x) for a class x without constant term; nilpotency truncates the sum."""
    if x.constant() != 0:
        raise ValueError("series evaluation needs a class with zero constant term")
    ring = x.ring
    out = ring.one() * s.coeffs[0]
    power = ring.one()
    for k in range(1, min(s.order, ring.top) + 1):
        power = power * x
        if power.is_zero():
            break
        if s.coeffs[k]:
            out = out + power * s.coeffs[k]
    return out


def exp_class(x: CohomClass) -> CohomClass:
    return evaluate(exp_series(x.ring.top), x)


def _one_minus(order: int, power: int) -> Series:
    """(1 - t)^power as a series in t."""
    return Series([1, -1], order) ** power


def chern_total(ring: RingPresentation) -> CohomClass:
    """Total Chern class of the tangent bundle of the wonderful model."""
    N = ring.top
    c = evaluate(_one_minus(N, ring.n), ring.gen(0))
    for i in range(1, ring.g):
        g = ring.gamma(i)
        f = evaluate(_one_minus(N, -g), ring.etilde_prime(i))
        f = f * (ring.one() + ring.gen(i))
        f = f * evaluate(_one_minus(N, g), ring.etilde(i))
        c = c * f
    return c


def todd_class(ring: RingPresentation) -> CohomClass:
    N = ring.top
    Q = todd_series(N)
    Qneg = Series([x * (-1) ** k for k, x in enumerate(Q.coeffs)], N)  # Q(-t)
    td = evaluate(Qneg ** ring.n, ring.gen(0))
    for i in range(1, ring.g):
        g = ring.gamma(i)
        f = evaluate(Qneg ** (-g), ring.etilde_prime(i))
        f = f * evaluate(Q, ring.gen(i))
        f = f * evaluate(Qneg ** g, ring.etilde(i))
        td = td * f
    return td


def sign_flip(cls: CohomClass) -> CohomClass:
    """Multiply the degree-k part by (-1)^k, i.e. pass to the dual bundle."""
    return CohomClass(cls.ring, {m: x * (-1) ** sum(m) for m, x in cls.coeffs.items()})


def chern_log(ring: RingPresentation) -> CohomClass:
    """Total Chern class of the logarithmic cotangent bundle along the total transform."""
    N = ring.top
    inv = _one_minus(N, -1)
    out = sign_flip(chern_total(ring))
    for i in range(1, ring.g):
        out = out * evaluate(inv, ring.gen(i))
    for i in range(ring.lattice.d_red):
        out = out * evaluate(inv, ring.component_class(i))
    return out


def newton_power_sums(elementary: list[CohomClass], N: int) -> list[CohomClass]:
    """Power sums p_1..p_N from elementary symmetric classes e_1..e_N (index 0 unused)."""
    ring = elementary[0].ring
    p = [ring.zero()] * (N + 1)
    for k in range(1, N + 1):
        s = elementary[k] * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            s = s + elementary[i] * p[k - i] * (-1) ** (i - 1)
        p[k] = s
    return p


def newton_elementary(power: list[CohomClass], N: int) -> list[CohomClass]:
    """Elementary symmetric classes e_0..e_N from power sums p_1..p_N."""
    ring = power[1].ring if N >= 1 else None
    e = [ring.one() if ring else None] + [None] * N
    for j in range(1, N + 1):
        s = ring.zero()
        for i in range(1, j + 1):
            s = s + e[j - i] * power[i] * (-1) ** (i - 1)
        e[j] = s * Fraction(1, j)
    return e


def ch_exterior(total: CohomClass, rank: int, p: int) -> CohomClass:
    """Chern character of the p-th exterior power of a bundle with total Chern class ``total``.

    Uses the identity ch(Lambda^p E) = sum_j C(r-j, p-j) e_j(y), where the
    y_i = exp(x_i) - 1 are shifted exponentials of the Chern roots x_i.
    """
    ring = total.ring
    if not 0 <= p <= rank:
        return ring.zero()
    N = ring.top
    if N == 0:
        return ring.one() * binom(rank, p)
    chern = [total.part(k) for k in range(N + 1)]
    P = newton_power_sums(chern, N)
    # S_j = sum_i exp(j x_i)
    S = []
    for j in range(N + 1):
        s = ring.one() * rank
        for m in range(1, N + 1):
            s = s + P[m] * Fraction(j ** m, factorial(m))
        S.append(s)
    q = [ring.zero()] * (N + 1)
    for k in range(1, N + 1):
        s = ring.zero()
        for j in range(k + 1):
            s = s + S[j] * (binom(k, j) * (-1) ** (k - j))
        q[k] = s
    e = newton_elementary(q, N)
    out = ring.zero()
    for j in range(min(p, rank, N) + 1):
        out = out + e[j] * binom(rank - j, p - j)
    return out


def ch_bundle(total: CohomClass, rank: int) -> CohomClass:
    return ch_exterior(total, rank, 1)
