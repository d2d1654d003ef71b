"""Graded pieces of intersections of powers of linear ideals.

A homogeneous polynomial g of degree k lies in I_V^e exactly when, written
in coordinates whose first gamma(V) entries are the defining forms of V,
every monomial of degree < e in those first coordinates has coefficient 0.
The oracle stacks these linear conditions and takes an exact nullity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import lcm

from .arrangement import Arrangement, ArrangementError
from .lattice import Edge, Lattice, build
from .linalg import inverse, rank, rref
from .numbers import binom, ceil_frac, floor_frac

Monomial = tuple[int, ...]


def hom_dim(n: int, degree: int) -> int:
    if degree < 0:
        return 0
    return binom(degree + n - 1, n - 1)


@lru_cache(maxsize=None)
def monomials(n: int, degree: int) -> tuple[Monomial, ...]:
    if degree < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), degree):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class IdealSpec:
    n: int
    degree: int
    conditions: tuple[tuple[Edge, int], ...] = ()


@dataclass
class ConditionMatrix:
    """Linear conditions on the coefficient vector of a degree-``degree`` form.

    Columns follow :func:`monomials`; ``blocks`` records which (edge, order)
    produced which rows.
    """

    n: int
    degree: int
    rows: list[list[Fraction]] = field(default_factory=list)
    blocks: list[tuple[Edge, int, int, int]] = field(default_factory=list)  # edge, order, start, stop

    def extend(self, other: "ConditionMatrix"):
        start = len(self.rows)
        self.rows.extend(other.rows)
        for e, k, a, b in other.blocks:
            self.blocks.append((e, k, a + start, b + start))


def adapted_coordinates(edge: Edge) -> list[list[Fraction]]:
    """Invertible T whose first gamma rows are the RREF equations of ``edge``.

    The remaining rows are unit vectors on the non-pivot columns.
    """
    red, piv = rref(edge.eqns)
    free = [c for c in range(edge.n) if c not in piv]
    T = [list(r) for r in red]
    for c in free:
        T.append([Fraction(int(j == c)) for j in range(edge.n)])
    return T


def _times_linear(p: dict, lin: dict) -> dict:
    out: dict = {}
    for ma, ca in p.items():
        for mb, cb in lin.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def _integer_inverse(T) -> list[list[int]]:
    """A positive integer multiple of T^-1.

    Rescaling all coordinates by one constant multiplies every degree-k form
    by the same factor, so the vanishing conditions are unchanged.
    """
    Tinv = inverse(T)
    den = 1
    for row in Tinv:
        for x in row:
            den = lcm(den, x.denominator)
    return [[int(x * den) for x in row] for row in Tinv]


@lru_cache(maxsize=4096)
def _order_rows(edge: Edge, order: int, degree: int) -> tuple[tuple[int, ...], ...]:
    n, gamma = edge.n, edge.gamma
    M = _integer_inverse(adapted_coordinates(edge))
    # x_i as a linear form in the adapted coordinates y
    lin = []
    for i in range(n):
        p = {}
        for j in range(n):
            if M[i][j]:
                e = [0] * n
                e[j] = 1
                p[tuple(e)] = M[i][j]
        lin.append(p)
    # images of all monomials up to the target degree, one linear factor at a time
    images = {(0,) * n: {(0,) * n: 1}}
    for k in range(1, degree + 1):
        for m in monomials(n, k):
            i = next(t for t, x in enumerate(m) if x)
            prev = list(m)
            prev[i] -= 1
            images[m] = _times_linear(images[tuple(prev)], lin[i])
    cols = [images[m] for m in monomials(n, degree)]
    low = [m for m in monomials(n, degree) if sum(m[:gamma]) < order]
    return tuple(tuple(img.get(m, 0) for img in cols) for m in low)


def order_conditions(edge: Edge, order: int, degree: int) -> ConditionMatrix:
    """Rows expressing g in I_edge^order among forms of the given degree."""
    if degree < 0:
        raise ValueError("negative degree")
    cm = ConditionMatrix(edge.n, degree)
    if order <= 0:
        return cm
    cm.rows = [list(r) for r in _order_rows(edge, order, degree)]
    cm.blocks.append((edge, order, 0, len(cm.rows)))
    return cm


def condition_matrix(spec: IdealSpec) -> ConditionMatrix:
    cm = ConditionMatrix(spec.n, spec.degree)
    if spec.degree < 0:
        return cm
    for edge, order in spec.conditions:
        if order > 0:
            cm.extend(order_conditions(edge, order, spec.degree))
    return cm


def ideal_dim(spec: IdealSpec) -> int:
    """dim of (intersection of I_V^{e_V}) in degree ``spec.degree``."""
    total = hom_dim(spec.n, spec.degree)
    if total == 0:
        return 0
    cm = condition_matrix(spec)
    return total - rank(cm.rows) if cm.rows else total


def _essential_lattice(arr: Arrangement, lat: Lattice | None) -> Lattice:
    lat = lat or build(arr)
    if not lat.contains_origin:
        raise ArrangementError("arrangement is not essential")
    return lat


def thm5_spec(arr: Arrangement, j: int, lat: Lattice | None = None) -> IdealSpec:
    d = arr.d
    if not 1 <= j <= d:
        raise ValueError(f"j={j} outside [1, {d}]")
    lat = _essential_lattice(arr, lat)
    alpha = Fraction(j, d)
    conds = []
    for v in lat.nrnc:
        if v.is_origin:
            continue
        e = ceil_frac(alpha * v.mu) - v.gamma
        if e > 0:
            conds.append((v, e))
    return IdealSpec(arr.n, j - arr.n, tuple(conds))


def thm5_coeff(arr: Arrangement, j: int, lat: Lattice | None = None) -> int:
    """Spectrum coefficient at alpha = j/d in (0, 1] as a graded ideal dimension."""
    return ideal_dim(thm5_spec(arr, j, lat))


def mustata_exponents(lat: Lattice, alpha: Fraction) -> list[tuple[Edge, int]]:
    alpha = Fraction(alpha)
    out = []
    for v in lat.nrnc:
        e = floor_frac(alpha * v.mu) - v.gamma + 1
        if e > 0:
            out.append((v, e))
    return out


def mustata_graded_dim(arr: Arrangement, alpha, degree: int, lat: Lattice | None = None) -> int:
    """Dimension of the multiplier ideal J(alpha D) in the given degree."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    if degree < 0:
        raise ValueError("degree must be >= 0")
    lat = lat or build(arr)
    return ideal_dim(IdealSpec(arr.n, degree, tuple(mustata_exponents(lat, alpha))))


def independence_rank(arr: Arrangement, j: int, lat: Lattice | None = None) -> tuple[int, int]:
    """(rank of the point conditions, sum of (e+1 choose 2)) for reduced n = 3."""
    if arr.n != 3:
        raise ArrangementError("independence check needs n = 3")
    if not arr.is_reduced:
        raise ArrangementError("independence check needs a reduced arrangement")
    spec = thm5_spec(arr, j, lat)
    expected = sum(binom(e + 1, 2) for _, e in spec.conditions)
    if spec.degree < 0:
        return 0, expected
    cm = condition_matrix(spec)
    return (rank(cm.rows) if cm.rows else 0), expected
