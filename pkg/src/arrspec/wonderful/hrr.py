"""Riemann-Roch evaluation of spectrum coefficients on the wonderful model.

A coefficient n_{f,alpha} with alpha = i/d + ell equals (-1)^ell times the
Euler characteristic of Omega^p(log) twisted by O(D_k), with p = n-1-ell and
k = d-i. The divisor class of D_k is

    k*c + sum_{V in S, V != 0} floor(k mu(V)/d) e_V + sum_i floor(k m_i/d) e_{D_i}.

At (i, ell) = (d, n-1) the Euler characteristic is that of O, which counts the
constant in degree 0; the spectrum uses reduced cohomology there, so the raw
value (-1)^(n-1) is removed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property, lru_cache

from ..arrangement import Arrangement
from ..lattice import Lattice, build
from ..numbers import floor_frac
from .classes import ch_exterior, chern_log, chern_total, exp_class, todd_class
from .ring import CohomClass, RingPresentation


class HRRError(ArithmeticError):
    pass


def build_ring(lat: Lattice) -> RingPresentation:
    return RingPresentation(lat)


def integrate(ring: RingPresentation, cls: CohomClass) -> Fraction:
    return ring.integrate(cls)


def hrr_chi(ring: RingPresentation, ch: CohomClass, td: CohomClass | None = None) -> int:
    """chi = integral of ch * Td; a non-integral value means a bug and raises."""
    td = todd_class(ring) if td is None else td
    val = ring.integrate(ch * td)
    if val.denominator != 1:
        raise HRRError(f"non-integral Euler characteristic {val}")
    return int(val)


class HRREngine:
    """Caches the ring, Todd class and log-forms Chern characters of one arrangement."""

    def __init__(self, arr: Arrangement, lat: Lattice | None = None):
        self.arrangement = arr
        self.lattice = lat or build(arr)
        self.ring = build_ring(self.lattice)
        self._ch: dict[int, CohomClass] = {}

    @cached_property
    def todd(self) -> CohomClass:
        return todd_class(self.ring)

    @cached_property
    def chern(self) -> CohomClass:
        return chern_total(self.ring)

    @cached_property
    def chern_log(self) -> CohomClass:
        return chern_log(self.ring)

    def ch_log_forms(self, p: int) -> CohomClass:
        if p not in self._ch:
            self._ch[p] = ch_exterior(self.chern_log, self.ring.top, p)
        return self._ch[p]

    def divisor_class(self, coeffs: dict[int, int], h: int = 0, components: dict[int, int] | None = None) -> CohomClass:
        """sum a_V e_V + h * Htilde + sum b_i e_{D_i}, with Htilde = -c.

        ``coeffs`` is keyed by generator index (index 0 is c itself).
        """
        ring = self.ring
        cls = ring.c * (-h)
        for v, a in coeffs.items():
            if a:
                cls = cls + ring.gen(v) * a
        for i, b in (components or {}).items():
            if b:
                cls = cls + ring.component_class(i) * b
        return cls

    def twist_class(self, k: int) -> CohomClass:
        """Class of D_k for 0 <= k < d."""
        arr, ring = self.arrangement, self.ring
        d = arr.d
        coeffs = {0: k}
        for v in range(1, ring.g):
            coeffs[v] = floor_frac(Fraction(k * ring.edges[v].mu, d))
        comps = {i: floor_frac(Fraction(k * m, d)) for i, m in enumerate(arr.mults)}
        return self.divisor_class(coeffs, 0, comps)

    def chi(self, p: int, divisor: CohomClass) -> int:
        """chi(Omega^p(log) tensor O(divisor))."""
        return hrr_chi(self.ring, self.ch_log_forms(p) * exp_class(divisor), self.todd)

    def coeff(self, i: int, ell: int) -> int:
        arr = self.arrangement
        n, d = arr.n, arr.d
        if not 1 <= i <= d:
            raise ValueError(f"i={i} outside [1, {d}]")
        if not 0 <= ell <= n - 1:
            raise ValueError(f"ell={ell} outside [0, {n - 1}]")
        p, k = n - 1 - ell, d - i
        val = (-1) ** ell * self.chi(p, self.twist_class(k))
        if i == d and ell == n - 1:
            val -= (-1) ** (n - 1)
        return val


@lru_cache(maxsize=64)
def engine_for(arr: Arrangement) -> HRREngine:
    return HRREngine(arr)


def spectrum_coeff_hrr(arr: Arrangement, i: int, ell: int) -> int:
    """n_{f, i/d + ell} by Riemann-Roch on the wonderful model."""
    return engine_for(arr).coeff(i, ell)
