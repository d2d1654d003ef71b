"""Intersection lattice of an arrangement and its combinatorial invariants."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property

from .arrangement import Arrangement, ArrangementError
from .linalg import canonical_basis, in_row_space, rref
from .numbers import binom


@dataclass(frozen=True)
class Edge:
    """A nonempty intersection of hyperplanes.

    ``eqns`` is the canonical integer basis of the linear forms vanishing on
    the edge; two edges are equal iff their ``eqns`` agree.
    """

    n: int
    eqns: tuple[tuple[int, ...], ...]
    hyperplanes: tuple[int, ...]
    mu: int

    @property
    def gamma(self) -> int:
        return len(self.eqns)

    @property
    def mu_red(self) -> int:
        return len(self.hyperplanes)

    @property
    def is_nnc(self) -> bool:
        return self.mu_red > self.gamma

    @property
    def is_nrnc(self) -> bool:
        return self.mu > self.gamma

    @property
    def is_origin(self) -> bool:
        return self.gamma == self.n

    def contains(self, other: "Edge") -> bool:
        """Subspace inclusion ``other <= self``."""
        return set(self.hyperplanes) <= set(other.hyperplanes)

    def describe(self) -> str:
        return "{" + ",".join(str(i) for i in self.hyperplanes) + "}"


def _containing(arr: Arrangement, eqns) -> tuple[int, ...]:
    basis, piv = rref(eqns)
    return tuple(i for i, h in enumerate(arr.hyperplanes) if in_row_space(basis, piv, h.normal))


def make_edge(arr: Arrangement, eqns) -> Edge:
    key = canonical_basis(eqns)
    hyp = _containing(arr, key)
    return Edge(arr.n, key, hyp, sum(arr.hyperplanes[i].mult for i in hyp))


class Lattice:
    """All edges of ``arr`` sorted by (codimension, hyperplane set).

    The whole space X is not an edge; it enters only through
    :func:`moebius_ranks` and :func:`betti_complement` as the top element.
    """

    def __init__(self, arr: Arrangement, edges: list[Edge]):
        self.arrangement = arr
        self.edges: tuple[Edge, ...] = tuple(sorted(edges, key=lambda e: (e.gamma, e.hyperplanes)))
        self.index = {e.eqns: i for i, e in enumerate(self.edges)}

    n = property(lambda self: self.arrangement.n)
    d = property(lambda self: self.arrangement.d)
    d_red = property(lambda self: self.arrangement.d_red)

    @property
    def contains_origin(self) -> bool:
        return any(e.is_origin for e in self.edges)

    @property
    def origin(self) -> Edge:
        for e in self.edges:
            if e.is_origin:
                return e
        raise ArrangementError("arrangement is not essential")

    def of_codim(self, k: int) -> list[Edge]:
        return [e for e in self.edges if e.gamma == k]

    @cached_property
    def nnc(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_nnc)

    @cached_property
    def nrnc(self) -> tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_nrnc)

    def edge_for(self, hyperplanes) -> Edge:
        """The smallest edge containing the given hyperplane indices' intersection."""
        eqns = [self.arrangement.hyperplanes[i].normal for i in hyperplanes]
        key = canonical_basis(eqns)
        if key not in self.index:
            raise ArrangementError(f"no edge for hyperplanes {list(hyperplanes)}")
        return self.edges[self.index[key]]

    def meet(self, a: Edge, b: Edge) -> Edge:
        key = canonical_basis(list(a.eqns) + list(b.eqns))
        return self.edges[self.index[key]]

    def __repr__(self):
        return f"Lattice(n={self.n}, d={self.d}, edges={len(self.edges)})"


def build(arr: Arrangement) -> Lattice:
    """Breadth-first closure of the hyperplanes under intersection."""
    seen: dict[tuple, Edge] = {}
    queue = deque()
    for h in arr.hyperplanes:
        e = make_edge(arr, [h.normal])
        if e.eqns not in seen:
            seen[e.eqns] = e
            queue.append(e)
    while queue:
        e = queue.popleft()
        for i, h in enumerate(arr.hyperplanes):
            if i in e.hyperplanes:
                continue
            key = canonical_basis(list(e.eqns) + [h.normal])
            if key in seen:
                continue
            new = make_edge(arr, key)
            seen[key] = new
            queue.append(new)
    return Lattice(arr, list(seen.values()))


@dataclass(frozen=True)
class NuTable:
    """Counts of non-normal-crossing edges other than the origin, by codimension and multiplicity.

    ``single[i][m]`` is the number of nnc edges of codim i with multiplicity m;
    ``pairs[(i, j)][(m, m2)]`` counts incident pairs V > V' of codims i < j.
    """

    single: dict[int, dict[int, int]]
    pairs: dict[tuple[int, int], dict[tuple[int, int], int]]

    def nu(self, i: int, m: int) -> int:
        return self.single.get(i, {}).get(m, 0)

    def nu_pair(self, i: int, j: int, m: int, m2: int) -> int:
        return self.pairs.get((i, j), {}).get((m, m2), 0)

    @property
    def nu2(self) -> dict[int, int]:
        return dict(self.single.get(2, {}))

    @property
    def nu3(self) -> dict[int, int]:
        return dict(self.single.get(3, {}))

    @property
    def nu23(self) -> dict[tuple[int, int], int]:
        return dict(self.pairs.get((2, 3), {}))


def nu_tables(lat: Lattice) -> NuTable:
    single: dict[int, Counter] = {}
    pairs: dict[tuple[int, int], Counter] = {}
    S = [v for v in lat.nnc if not v.is_origin]  # codims 2 .. n-1
    for v in S:
        single.setdefault(v.gamma, Counter())[v.mu] += 1
    for v in S:
        for w in S:
            if v.gamma < w.gamma and v.contains(w):
                pairs.setdefault((v.gamma, w.gamma), Counter())[(v.mu, w.mu)] += 1
    return NuTable(
        {k: dict(sorted(c.items())) for k, c in sorted(single.items())},
        {k: dict(sorted(c.items())) for k, c in sorted(pairs.items())},
    )


@dataclass(frozen=True)
class MoebiusTable:
    """Ranks r_V on the lattice with the whole space adjoined (r_X = 1)."""

    top: int
    ranks: tuple[int, ...]  # aligned with Lattice.edges

    def __getitem__(self, i: int) -> int:
        return self.ranks[i]


def moebius_ranks(lat: Lattice) -> MoebiusTable:
    ranks: list[int] = []
    for j, v in enumerate(lat.edges):
        # edges are sorted by codim, so everything strictly above v is already known
        s = 1  # the whole space, codim 0
        for i in range(j):
            w = lat.edges[i]
            if w.gamma < v.gamma and w.contains(v):
                s += (-1) ** w.gamma * ranks[i]
        r = (-1) ** (v.gamma + 1) * s
        if r <= 0:
            raise AssertionError(f"nonpositive Moebius rank at {v.describe()}")
        ranks.append(r)
    table = MoebiusTable(1, tuple(ranks))
    for j, v in enumerate(lat.edges):
        total = 1 + sum((-1) ** w.gamma * ranks[i] for i, w in enumerate(lat.edges) if w.contains(v))
        assert total == 0, f"Moebius sum rule fails at {v.describe()}"
    return table


@dataclass(frozen=True)
class BettiReport:
    betti: tuple[int, ...]  # b_0 .. b_{n-1} of the projective complement
    chi: int


def betti_for_component(lat: Lattice, k: int, moebius: MoebiusTable | None = None) -> tuple[int, ...]:
    """Betti numbers of P^{n-1} minus P(D), summing r_V over flats not inside D_k."""
    mt = moebius or moebius_ranks(lat)
    b = [0] * lat.n
    b[0] = mt.top
    for i, v in enumerate(lat.edges):
        if k in v.hyperplanes or v.gamma >= lat.n:
            continue
        b[v.gamma] += mt[i]
    return tuple(b)


def betti_complement(lat: Lattice) -> BettiReport:
    if not lat.arrangement.hyperplanes:
        raise ArrangementError("empty arrangement")
    mt = moebius_ranks(lat)
    results = {betti_for_component(lat, k, mt) for k in range(lat.d_red)}
    if len(results) != 1:
        raise AssertionError(f"Betti numbers depend on the deleted component: {sorted(results)}")
    (b,) = results
    return BettiReport(b, sum((-1) ** j * x for j, x in enumerate(b)))


def euler_complement_closedform_n3(lat: Lattice) -> int:
    """chi(P^2 minus P(D)) from the number of lines and the multiple points."""
    if lat.n != 3:
        raise ArrangementError("closed form needs n = 3")
    if not lat.arrangement.is_reduced:
        raise ArrangementError("closed form needs a reduced arrangement")
    nu = nu_tables(lat).nu2
    return binom(lat.d - 2, 2) - sum(c * binom(m - 1, 2) for m, c in nu.items())
