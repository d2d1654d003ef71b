"""Exact linear algebra over the rationals.

Everything here works on plain lists of ``Fraction`` or ``int``. Dense
routines are meant for the small matrices that show up in arrangements
(a handful of columns); :class:`SparseEchelon` handles the larger but very
sparse systems coming from the cohomology-ring presentation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

_RATIONAL = re.compile(r"(-?[0-9]+)(?:/([0-9]+))?")


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def parse_rational(s: str) -> Fraction:
    """Parse ``"p"``, ``"-p"`` or ``"p/q"``; floats and junk are rejected."""
    if not isinstance(s, str):
        raise ValueError(f"malformed rational: {s!r}")
    m = _RATIONAL.fullmatch(s.strip())
    if not m:
        raise ValueError(f"malformed rational: {s!r}")
    q = int(m.group(2)) if m.group(2) else 1
    if q == 0:
        raise ValueError(f"malformed rational: {s!r} (zero denominator)")
    return Fraction(int(m.group(1)), q)


def fmt_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, first nonzero entry positive."""
    fr = [as_fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        raise ValueError("zero vector")
    ints = [a // g for a in ints]
    for a in ints:
        if a != 0:
            if a < 0:
                ints = [-b for b in ints]
            break
    return tuple(ints)


def rref(rows: Iterable[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; zero rows are dropped. Returns (rows, pivot columns)."""
    m = [[as_fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def canonical_basis(rows: Iterable[Sequence]) -> tuple[tuple[int, ...], ...]:
    """Canonical integer basis of a row space: RREF rows scaled to coprime integers."""
    red, _ = rref(rows)
    return tuple(primitive_integer_vector(r) for r in red)


def _integer_rows(rows: Iterable[Sequence]) -> list[list[int]]:
    out = []
    for r in rows:
        if all(type(x) is int for x in r):
            out.append(list(r))
            continue
        fr = [as_fraction(x) for x in r]
        den = 1
        for x in fr:
            den = lcm(den, x.denominator)
        out.append([int(x * den) for x in fr])
    return out


def rank(rows: Iterable[Sequence]) -> int:
    """Rank by fraction-free integer elimination (denominators cleared row by row)."""
    m = [r for r in _integer_rows(rows) if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for c in range(ncols):
        piv = None
        for i in range(rk, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        prow = m[rk]
        p = prow[c]
        for i in range(rk + 1, len(m)):
            a = m[i][c]
            if a == 0:
                continue
            row = [p * x - a * y for x, y in zip(m[i], prow)]
            g = 0
            for x in row:
                g = gcd(g, x)
            if g > 1:
                row = [x // g for x in row]
            m[i] = row
        rk += 1
        if rk == len(m):
            break
    return rk


def in_row_space(basis_rref: Sequence[Sequence], pivots: Sequence[int], v: Sequence) -> bool:
    """Membership test against an RREF basis with pivot entries equal to 1."""
    w = [as_fraction(x) for x in v]
    for row, c in zip(basis_rref, pivots):
        f = w[c]
        if f != 0:
            w = [a - f * b for a, b in zip(w, row)]
    return not any(w)


def inverse(mat: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(mat)
    aug = [[as_fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


class SparseEchelon:
    """Incremental sparse Gaussian elimination over Q.

    Rows are dicts ``column -> Fraction``; smaller column index means higher
    pivot priority. After all rows are added, :meth:`normal_form` reduces any
    vector modulo the row space to a combination of non-pivot columns.
    """

    def __init__(self):
        self.rows: dict[int, dict[int, Fraction]] = {}

    def _reduce(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        v = {k: x for k, x in v.items() if x != 0}
        while True:
            hit = [k for k in v if k in self.rows]
            if not hit:
                return v
            k = min(hit)
            f = v[k]
            for c, x in self.rows[k].items():
                y = v.get(c, 0) - f * x
                if y == 0:
                    v.pop(c, None)
                else:
                    v[c] = y

    def add(self, v: dict[int, Fraction]) -> bool:
        v = self._reduce(v)
        if not v:
            return False
        k = min(v)
        f = v[k]
        row = {c: x / f for c, x in v.items()}
        # keep every stored row free of the new pivot
        for r in self.rows.values():
            g = r.get(k)
            if g:
                for c, x in row.items():
                    y = r.get(c, 0) - g * x
                    if y == 0:
                        r.pop(c, None)
                    else:
                        r[c] = y
        self.rows[k] = row
        return True

    @property
    def pivots(self) -> set[int]:
        return set(self.rows)

    def normal_form(self, v: dict[int, Fraction]) -> dict[int, Fraction]:
        return self._reduce(dict(v))
