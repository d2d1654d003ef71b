"""Jumping coefficients of the multiplier ideals J(alpha D) in (0, 1).

The general route: alpha in (0,1) jumps iff some nrnc edge V has
n_{f_{X/V}, alpha} != 0, where f_{X/V} is the quotient arrangement. Those
coefficients are graded ideal dimensions, so nonzero means positive. 1 always
jumps and is reported separately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, ArrangementError, quotient
from .lattice import Edge, Lattice, build, nu_tables
from .linalg import fmt_rational
from .polyoracle import thm5_coeff
from .spectrum import n3_coeff, n4_unit_coeff

ONE_IS_JUMPING = True  # J(D) is strictly smaller than J((1-eps)D) = O


@dataclass(frozen=True)
class Witness:
    edge: Edge
    value: int

    def to_record(self) -> dict:
        return {"codim": self.edge.gamma, "mu": self.edge.mu,
                "hyperplanes": list(self.edge.hyperplanes), "value": self.value}


@dataclass
class JumpReport:
    method: str
    coefficients: list[Fraction] = field(default_factory=list)
    witnesses: dict[Fraction, Witness] = field(default_factory=dict)

    def add(self, alpha: Fraction, edge: Edge, value: int):
        """Keep the witness of smallest codimension."""
        old = self.witnesses.get(alpha)
        if old is None:
            self.coefficients.append(alpha)
            self.coefficients.sort()
            self.witnesses[alpha] = Witness(edge, value)
        elif (edge.gamma, edge.hyperplanes) < (old.edge.gamma, old.edge.hyperplanes):
            self.witnesses[alpha] = Witness(edge, value)

    @property
    def as_set(self) -> frozenset[Fraction]:
        return frozenset(self.coefficients)

    def to_record(self, with_witnesses: bool = True) -> dict:
        rec = {"method": self.method,
               "coefficients": [fmt_rational(a) for a in self.coefficients],
               "one_is_jumping": ONE_IS_JUMPING}
        if with_witnesses:
            rec["witnesses"] = {fmt_rational(a): self.witnesses[a].to_record()
                                for a in self.coefficients}
        return rec

    def serialize(self, with_witnesses: bool = True) -> str:
        return json.dumps(self.to_record(with_witnesses), sort_keys=True)


def local_unit_coeff(arr: Arrangement, edge: Edge, alpha: Fraction, cache: dict | None = None) -> int:
    """n_{f_{X/V}, alpha} for alpha in (0,1] on the mu(V)-grid."""
    j = alpha * edge.mu
    if j.denominator != 1:
        return 0
    key = (edge.eqns, int(j))
    if cache is not None and key in cache:
        return cache[key]
    q = quotient(arr, edge)
    val = thm5_coeff(q, int(j))
    if cache is not None:
        cache[key] = val
    return val


def jc_unit_interval(arr: Arrangement, lat: Lattice | None = None) -> JumpReport:
    lat = lat or build(arr)
    edges = sorted(lat.nrnc, key=lambda e: (e.gamma, e.hyperplanes))
    cands = sorted({Fraction(j, v.mu) for v in edges for j in range(1, v.mu)})
    rep = JumpReport("prop1")
    cache: dict = {}
    for a in cands:
        for v in edges:
            if (a * v.mu).denominator != 1:
                continue
            val = local_unit_coeff(arr, v, a, cache)
            if val < 0:
                raise AssertionError("negative ideal dimension")
            if val:
                rep.add(a, v, val)
                break
    return rep


def _first_edge(lat: Lattice, gamma: int, mu: int) -> Edge:
    return next(e for e in lat.nnc if e.gamma == gamma and e.mu == mu)


def _codim2_clause(lat: Lattice, rep: JumpReport):
    for m in sorted(nu_tables(lat).nu2):
        v = _first_edge(lat, 2, m)
        for j in range(2, m):
            # m concurrent lines in the plane: n_{j/m} = j - 1
            rep.add(Fraction(j, m), v, j - 1)


def _require(lat: Lattice, n: int):
    if lat.n != n:
        raise ArrangementError(f"this corollary needs n = {n}, got n = {lat.n}")
    if not lat.arrangement.is_reduced:
        raise ArrangementError("this corollary needs a reduced arrangement")


def jc_cor1(lat: Lattice) -> JumpReport:
    _require(lat, 3)
    rep = JumpReport("cor1")
    _codim2_clause(lat, rep)
    d, nu2 = lat.d, nu_tables(lat).nu2
    for i in range(3, d):
        val = n3_coeff(d, nu2, i, 0)
        if val:
            rep.add(Fraction(i, d), lat.origin, val)
    return rep


def jc_cor2(lat: Lattice) -> JumpReport:
    _require(lat, 4)
    rep = JumpReport("cor2")
    _codim2_clause(lat, rep)
    arr = lat.arrangement
    for v in lat.nnc:
        if v.gamma != 3:
            continue
        qlat = build(quotient(arr, v))
        nu2 = nu_tables(qlat).nu2
        for i in range(3, v.mu):
            val = n3_coeff(v.mu, nu2, i, 0)
            if val:
                rep.add(Fraction(i, v.mu), v, val)
    d, nu = lat.d, nu_tables(lat)
    for i in range(4, d):
        val = n4_unit_coeff(d, nu, i)
        if val:
            rep.add(Fraction(i, d), lat.origin, val)
    return rep
