"""Spectrum coefficients n_{f,alpha} of a central arrangement.

Every coefficient lives on the grid alpha = i/d + ell with 1 <= i <= d and
0 <= ell <= n-1. Tables record which route produced each entry:
``formula`` (closed forms), ``oracle`` (graded ideal dimensions) or ``hrr``
(Riemann-Roch on the wonderful model).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, ArrangementError, validate
from .lattice import Lattice, betti_complement, build, nu_tables
from .linalg import fmt_rational
from .numbers import binom, ceil_frac
from .polyoracle import thm5_coeff

UNIT, FULL, PARTIAL = "unit", "full", "partial"


def grid(n: int, d: int, rng: str = FULL) -> list[Fraction]:
    top = 1 if rng == UNIT else n
    return [Fraction(i, d) + ell for ell in range(top) for i in range(1, d + 1)]


def split_alpha(alpha: Fraction, d: int) -> tuple[int, int]:
    """alpha = i/d + ell with 1 <= i <= d."""
    alpha = Fraction(alpha)
    j = alpha * d
    if j.denominator != 1 or j <= 0:
        raise ValueError(f"{alpha} is not on the positive 1/{d} grid")
    j = int(j)
    ell = (j - 1) // d
    return j - ell * d, ell


@dataclass
class SpectrumTable:
    n: int
    d: int
    entries: dict[Fraction, int] = field(default_factory=dict)
    provenance: dict[Fraction, str] = field(default_factory=dict)
    range: str = FULL
    warnings: tuple[str, ...] = ()

    def set(self, alpha, value: int, source: str):
        alpha = Fraction(alpha)
        self.entries[alpha] = int(value)
        self.provenance[alpha] = source

    def __getitem__(self, alpha) -> int:
        alpha = Fraction(alpha)
        if alpha in self.entries:
            return self.entries[alpha]
        if alpha <= 0 or alpha >= self.n or (alpha * self.d).denominator != 1:
            return 0
        raise KeyError(f"no entry at {fmt_rational(alpha)}")

    def __contains__(self, alpha) -> bool:
        return Fraction(alpha) in self.entries

    def alphas(self) -> list[Fraction]:
        return sorted(self.entries)

    def unit(self) -> "SpectrumTable":
        t = SpectrumTable(self.n, self.d, range=UNIT, warnings=self.warnings)
        for a in self.alphas():
            if a <= 1:
                t.set(a, self.entries[a], self.provenance[a])
        return t

    @property
    def is_full(self) -> bool:
        return all(a in self.entries for a in grid(self.n, self.d, FULL))

    def to_record(self, with_provenance: bool = True) -> dict:
        rows = []
        for a in self.alphas():
            row = {"alpha": fmt_rational(a), "n": self.entries[a]}
            if with_provenance:
                row["source"] = self.provenance[a]
            rows.append(row)
        return {"n": self.n, "d": self.d, "range": self.range,
                "entries": rows, "warnings": list(self.warnings)}

    def serialize(self, with_provenance: bool = True) -> str:
        return json.dumps(self.to_record(with_provenance), sort_keys=True)


def _require(lat: Lattice, n: int):
    if lat.n != n:
        raise ArrangementError(f"this formula needs n = {n}, got n = {lat.n}")
    if not lat.arrangement.is_reduced:
        raise ArrangementError("this formula needs a reduced arrangement")


def _warnings(arr: Arrangement) -> tuple[str, ...]:
    return validate(arr).warnings


# -- closed forms -------------------------------------------------------------

def n3_coeff(d: int, nu2: dict[int, int], i: int, ell: int) -> int:
    """Three-line closed form for reduced planes in 3-space, from (d, nu2) alone."""
    if ell == 0:
        return binom(i - 1, 2) - sum(c * binom(ceil_frac(Fraction(i * m, d)) - 1, 2) for m, c in nu2.items())
    if ell == 1:
        s = 0
        for m, c in nu2.items():
            a = ceil_frac(Fraction(i * m, d))
            s += c * (a - 1) * (m - a)
        return (i - 1) * (d - i - 1) - s
    if ell == 2:
        s = sum(c * binom(m - ceil_frac(Fraction(i * m, d)), 2) for m, c in nu2.items())
        return binom(d - i - 1, 2) - s - (1 if i == d else 0)
    raise ValueError("ell must be 0, 1 or 2")


def spectrum_n3(lat: Lattice) -> SpectrumTable:
    _require(lat, 3)
    d, nu2 = lat.d, nu_tables(lat).nu2
    t = SpectrumTable(3, d, range=FULL, warnings=_warnings(lat.arrangement))
    for ell in range(3):
        for i in range(1, d + 1):
            t.set(Fraction(i, d) + ell, n3_coeff(d, nu2, i, ell), "formula")
    return t


def n4_unit_coeff(d: int, nu, i: int) -> int:
    def a(m):
        return ceil_frac(Fraction(i * m, d))

    val = binom(i - 1, 3)
    for (m, m2), c in nu.nu23.items():
        val -= c * (2 * binom(a(m) - 1, 3) - binom(a(m) - 1, 2) * (a(m2) - 3))
    for m, c in nu.nu2.items():
        val += c * (2 * binom(a(m) - 1, 3) - (i - 3) * binom(a(m) - 1, 2))
    for m2, c in nu.nu3.items():
        val -= c * binom(a(m2) - 1, 3)
    return val


def spectrum_n4_low(lat: Lattice) -> SpectrumTable:
    _require(lat, 4)
    d, nu = lat.d, nu_tables(lat)
    t = SpectrumTable(4, d, range=UNIT, warnings=_warnings(lat.arrangement))
    for i in range(1, d + 1):
        t.set(Fraction(i, d), n4_unit_coeff(d, nu, i), "formula")
    return t


def spectrum_generic(n: int, d: int) -> SpectrumTable:
    """Closed-form values for a generic arrangement of d hyperplanes in n-space.

    Non-integral alpha strictly between 1 and n-1 have no closed form and are
    left out; the table is marked ``partial`` in that case.
    """
    warnings = ("deg D_red <= n: the arrangement is a normal crossing divisor",) if d <= n else ()
    t = SpectrumTable(n, d, range=FULL, warnings=warnings)
    for i in range(1, d):
        v = binom(i - 1, n - 1)
        t.set(Fraction(i, d), v, "formula")
        t.set(n - Fraction(i, d), v, "formula")
    for i in range(1, n):
        t.set(i, (-1) ** (i - 1) * binom(d - 1, n - i), "formula")
    t.set(n, 0, "formula")
    if not t.is_full:
        t.range = PARTIAL
    return t


# -- oracle and Riemann-Roch routes -----------------------------------------

def spectrum_unit_general(arr: Arrangement, lat: Lattice | None = None) -> SpectrumTable:
    lat = lat or build(arr)
    t = SpectrumTable(arr.n, arr.d, range=UNIT, warnings=_warnings(arr))
    for j in range(1, arr.d + 1):
        t.set(Fraction(j, arr.d), thm5_coeff(arr, j, lat), "oracle")
    return t


def spectrum_hrr(arr: Arrangement, rng: str = FULL) -> SpectrumTable:
    from .wonderful.hrr import engine_for

    eng = engine_for(arr)
    t = SpectrumTable(arr.n, arr.d, range=rng, warnings=_warnings(arr))
    for a in grid(arr.n, arr.d, rng):
        i, ell = split_alpha(a, arr.d)
        t.set(a, eng.coeff(i, ell), "hrr")
    return t


# -- checks ------------------------------------------------------------------

@dataclass(frozen=True)
class SumRuleReport:
    chi: int
    violations: tuple[tuple[int, int, int], ...]  # (i, got, expected)

    @property
    def ok(self) -> bool:
        return not self.violations


def sum_rule_target(n: int, chi: int, i: int, d: int) -> int:
    """(-1)^(n-1) (chi(U) - delta_{i,d})."""
    return (-1) ** (n - 1) * (chi - (1 if i == d else 0))


def check_sum_rule(table: SpectrumTable, lat: Lattice) -> SumRuleReport:
    if not table.is_full:
        raise ValueError("sum rule needs a full-range table")
    chi = betti_complement(lat).chi
    bad = []
    for i in range(1, table.d + 1):
        got = sum(table[Fraction(i, table.d) + ell] for ell in range(table.n))
        want = sum_rule_target(table.n, chi, i, table.d)
        if got != want:
            bad.append((i, got, want))
    return SumRuleReport(chi, tuple(bad))


def compare_tables(a: SpectrumTable, b: SpectrumTable) -> list[tuple[Fraction, int, int]]:
    """Entries on which two tables disagree, over their common alphas."""
    return [(x, a.entries[x], b.entries[x]) for x in sorted(set(a.entries) & set(b.entries))
            if a.entries[x] != b.entries[x]]
