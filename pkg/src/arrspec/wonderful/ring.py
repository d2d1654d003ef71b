"""Cohomology ring of the wonderful model built from non-normal-crossing edges.

Generators are one class e_V per edge V in S = nnc edges plus the origin
(the origin's generator ``c`` is minus the hyperplane class). Relations:

* e_V e_W = 0 for incomparable V, W;
* e_V * etilde_W^(gamma(W) - gamma(V)) = 0 for W strictly inside V;
* etilde_W^gamma(W) = 0;

where etilde_W is the sum of e_U over U in S with U inside W. Products of
generators along non-chains vanish outright, so each graded piece is
computed on chain-supported monomials only, by sparse exact elimination.
Everything above degree n-1 is truncated to zero.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations_with_replacement

from ..arrangement import ArrangementError
from ..lattice import Edge, Lattice
from ..linalg import SparseEchelon

Monomial = tuple[int, ...]


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = tuple(x + y for x, y in zip(ma, mb))
            out[m] = out.get(m, 0) + ca * cb
    return {m: c for m, c in out.items() if c != 0}


def _poly_pow(p: dict, k: int, g: int) -> dict:
    out = {(0,) * g: 1}
    for _ in range(k):
        out = _poly_mul(out, p)
    return out


class RingPresentation:
    def __init__(self, lat: Lattice):
        if not lat.contains_origin:
            raise ArrangementError("ring presentation needs an essential arrangement")
        self.lattice = lat
        self.n = lat.n
        self.top = lat.n - 1
        origin = lat.origin
        others = [e for e in lat.nnc if not e.is_origin]
        self.edges: tuple[Edge, ...] = (origin, *others)
        g = self.g = len(self.edges)
        # below[i]: generators whose edge lies inside edge i (i included)
        self.below = tuple(
            frozenset(j for j, w in enumerate(self.edges) if v.contains(w)) for v in self.edges)
        self.comparable = [[j in self.below[i] or i in self.below[j] for j in range(g)]
                           for i in range(g)]
        self._build()

    # -- construction -------------------------------------------------------

    def gamma(self, i: int) -> int:
        return self.edges[i].gamma

    def _unit(self, i: int) -> Monomial:
        e = [0] * self.g
        e[i] = 1
        return tuple(e)

    def is_chain(self, m: Monomial) -> bool:
        supp = [i for i, x in enumerate(m) if x]
        return all(self.comparable[a][b] for k, a in enumerate(supp) for b in supp[k + 1:])

    def etilde_poly(self, i: int) -> dict:
        return {self._unit(j): 1 for j in self.below[i]}

    def relations(self) -> list[dict]:
        rels = []
        for i in range(self.g):
            for j in self.below[i]:
                if j == i:
                    continue
                k = self.gamma(j) - self.gamma(i)
                rels.append(_poly_mul({self._unit(i): 1}, _poly_pow(self.etilde_poly(j), k, self.g)))
        for j in range(self.g):
            rels.append(_poly_pow(self.etilde_poly(j), self.gamma(j), self.g))
        return rels

    def chain_monomials(self, k: int) -> list[Monomial]:
        out = []
        for combo in combinations_with_replacement(range(self.g), k):
            e = [0] * self.g
            for i in combo:
                e[i] += 1
            m = tuple(e)
            if self.is_chain(m):
                out.append(m)
        # low powers of c first so that they are eliminated first; c^k comes last
        out.sort(key=lambda m: (m[0], tuple(-x for x in m)))
        return out

    def _build(self):
        rels = [(sum(next(iter(r))), r) for r in self.relations()]
        self.basis: list[list[Monomial]] = []
        self._nf: dict[Monomial, dict[Monomial, Fraction]] = {}
        self.relation_count = 0
        for k in range(self.top + 1):
            cols = self.chain_monomials(k)
            idx = {m: i for i, m in enumerate(cols)}
            ech = SparseEchelon()
            for deg, r in rels:
                if deg > k:
                    continue
                for mult in self.chain_monomials(k - deg):
                    row = {}
                    for m, c in r.items():
                        mm = tuple(x + y for x, y in zip(m, mult))
                        if mm in idx:
                            row[idx[mm]] = row.get(idx[mm], 0) + Fraction(c)
                    if row:
                        self.relation_count += 1
                        ech.add(row)
            basis = [m for i, m in enumerate(cols) if i not in ech.rows]
            self.basis.append(basis)
            for i, m in enumerate(cols):
                nf = ech.normal_form({i: Fraction(1)})
                self._nf[m] = {cols[j]: x for j, x in nf.items()}
        dims = self.graded_dims
        if dims[0] != 1 or dims[self.top] != 1:
            raise AssertionError(f"unexpected graded dimensions {dims}")
        top_c = tuple([self.top] + [0] * (self.g - 1))
        if self.basis[self.top] != [top_c]:
            raise AssertionError("c^(n-1) does not span the top degree")
        self._products: dict[tuple[Monomial, Monomial], dict] = {}

    # -- queries -----------------------------------------------------------

    @property
    def graded_dims(self) -> tuple[int, ...]:
        return tuple(len(b) for b in self.basis)

    def normal_form_monomial(self, m: Monomial) -> dict[Monomial, Fraction]:
        if sum(m) > self.top:
            return {}
        nf = self._nf.get(m)
        if nf is None:  # not supported on a chain
            return {}
        return nf

    def mul_monomials(self, a: Monomial, b: Monomial) -> dict[Monomial, Fraction]:
        key = (a, b) if a <= b else (b, a)
        hit = self._products.get(key)
        if hit is None:
            hit = self.normal_form_monomial(tuple(x + y for x, y in zip(a, b)))
            self._products[key] = hit
        return hit

    def reduce_poly(self, p: dict) -> "CohomClass":
        out: dict = {}
        for m, c in p.items():
            for b, x in self.normal_form_monomial(m).items():
                out[b] = out.get(b, 0) + Fraction(c) * x
        return CohomClass(self, out)

    # -- named classes -----------------------------------------------------

    def one(self) -> "CohomClass":
        return CohomClass(self, {(0,) * self.g: Fraction(1)})

    def zero(self) -> "CohomClass":
        return CohomClass(self, {})

    def gen(self, i: int) -> "CohomClass":
        if self.top < 1:
            return self.zero()
        return CohomClass(self, {self._unit(i): Fraction(1)})

    @property
    def c(self) -> "CohomClass":
        return self.gen(0)

    def etilde(self, i: int) -> "CohomClass":
        return sum((self.gen(j) for j in self.below[i]), self.zero())

    def etilde_prime(self, i: int) -> "CohomClass":
        return self.etilde(i) - self.gen(i)

    def index_of(self, edge: Edge) -> int:
        return self.edges.index(edge)

    def of_codim(self, k: int) -> list[int]:
        return [i for i, e in enumerate(self.edges) if e.gamma == k and i != 0]

    def component_class(self, i: int) -> "CohomClass":
        """Class of the proper transform of the i-th hyperplane."""
        if not 0 <= i < self.lattice.d_red:
            raise IndexError(f"no hyperplane {i}")
        out = self.zero()
        for j, w in enumerate(self.edges):
            if i in w.hyperplanes:
                out = out - self.gen(j)
        return out

    def integrate(self, cls: "CohomClass") -> Fraction:
        """Degree of the top part, normalized by the integral of c^(n-1) = (-1)^(n-1)."""
        top = cls.part(self.top)
        lam = top.coeffs.get(self.basis[self.top][0], Fraction(0))
        return lam * (-1) ** self.top

    def __repr__(self):
        return f"RingPresentation(n={self.n}, generators={self.g}, dims={self.graded_dims})"


class CohomClass:
    """A graded element of the ring, kept in normal form."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: RingPresentation, coeffs: dict):
        self.ring = ring
        self.coeffs = {m: Fraction(c) for m, c in coeffs.items() if c != 0}

    def _coerce(self, other) -> "CohomClass":
        if isinstance(other, CohomClass):
            return other
        return self.ring.one() * Fraction(other) if other != 0 else self.ring.zero()

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, 0) + c
        return CohomClass(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return CohomClass(self.ring, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CohomClass):
            f = Fraction(other)
            return CohomClass(self.ring, {m: c * f for m, c in self.coeffs.items()})
        out: dict = {}
        for a, ca in self.coeffs.items():
            for b, cb in other.coeffs.items():
                for m, x in self.ring.mul_monomials(a, b).items():
                    out[m] = out.get(m, 0) + ca * cb * x
        return CohomClass(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, CohomClass):
            other = self._coerce(other)
        return (self - other).coeffs == {}

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def part(self, k: int) -> "CohomClass":
        return CohomClass(self.ring, {m: c for m, c in self.coeffs.items() if sum(m) == k})

    def constant(self) -> Fraction:
        return self.coeffs.get((0,) * self.ring.g, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = ["c"] + [f"e{i}" for i in range(1, self.ring.g)]
        terms = []
        for m, c in sorted(self.coeffs.items(), key=lambda t: (sum(t[0]), t[0])):
            mono = "*".join(f"{names[i]}^{x}" if x > 1 else names[i] for i, x in enumerate(m) if x)
            terms.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(terms)
