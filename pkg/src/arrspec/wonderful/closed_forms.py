"""Closed-form Euler characteristics of line bundles on the wonderful model, n = 3 and 4.

Exceptional classes are indexed by the nnc edges of a given codimension in
lattice order. In the "geometric" convention the last argument C multiplies
the general hyperplane class Htilde; in the "ring" convention it multiplies
c = e_0 = -Htilde.
"""

from __future__ import annotations

from typing import Sequence

from ..arrangement import ArrangementError
from ..lattice import Edge, Lattice
from ..numbers import binom
from .hrr import HRREngine


def nnc_of_codim(lat: Lattice, k: int) -> list[Edge]:
    return [e for e in lat.nnc if e.gamma == k]


def _check(lat: Lattice, n: int, sizes: dict[str, tuple[Sequence, int]]):
    if lat.n != n:
        raise ArrangementError(f"closed form needs n = {n}, got n = {lat.n}")
    if not lat.arrangement.is_reduced:
        raise ArrangementError("closed form needs a reduced arrangement")
    for name, (vals, want) in sizes.items():
        if len(vals) != want:
            raise ValueError(f"{name} needs {want} entries, got {len(vals)}")


def chi_closed_n3(lat: Lattice, A: Sequence[int], C: int) -> tuple[int, int]:
    """(Phi0, Phi1): chi of O(sum A_j E_j + C Htilde) and of Omega^1(log) twisted by it."""
    pts = nnc_of_codim(lat, 2)
    _check(lat, 3, {"A": (A, len(pts))})
    d = lat.d
    phi0 = binom(C + 2, 2) - sum(binom(a, 2) for a in A)
    phi1 = sum(-a * a - a + v.mu * a for a, v in zip(A, pts)) + C * C + d * C + d - 1
    return phi0, phi1


def incidence_n4(lat: Lattice) -> tuple[list[Edge], list[Edge], list[list[int]]]:
    """Codim-2 and codim-3 nnc edges, and for each codim-2 edge the codim-3 ones below it."""
    lines = nnc_of_codim(lat, 2)
    pts = nnc_of_codim(lat, 3)
    below = [[k for k, p in enumerate(pts) if l.contains(p)] for l in lines]
    return lines, pts, below


def chi_closed_n4(lat: Lattice, A: Sequence[int], B: Sequence[int], C: int) -> int:
    """chi of O(sum A_j E_j + sum B_k E_k + C Htilde), geometric convention."""
    lines, pts, below = incidence_n4(lat)
    _check(lat, 4, {"A": (A, len(lines)), "B": (B, len(pts))})
    val = sum(binom(b, 3) for b in B) + binom(C + 3, 3)
    for a, ks in zip(A, below):
        nj = len(ks)
        val += 2 * (nj - 1) * binom(a + 1, 3) - binom(a, 2) * (sum(B[k] for k in ks) + C + 1)
    return val


def chi_ring_n4(lat: Lattice, A: Sequence[int], B: Sequence[int], C: int) -> int:
    """The same Euler characteristic with C multiplying c = -Htilde (ring convention)."""
    lines, pts, below = incidence_n4(lat)
    _check(lat, 4, {"A": (A, len(lines)), "B": (B, len(pts))})
    val = sum(binom(b, 3) for b in B) - binom(C - 1, 3)
    for a, ks in zip(A, below):
        nj = len(ks)
        val += 2 * (nj - 1) * binom(a + 1, 3) - binom(a, 2) * (sum(B[k] for k in ks) - C + 1)
    return val


def chi_closed_n4_checked(lat: Lattice, A: Sequence[int], B: Sequence[int], C: int) -> int:
    """chi_closed_n4, asserting agreement with the ring-convention form under C -> -C."""
    val = chi_closed_n4(lat, A, B, C)
    other = chi_ring_n4(lat, A, B, -C)
    if val != other:
        raise AssertionError(f"closed forms disagree at A={list(A)} B={list(B)} C={C}: {val} != {other}")
    return val


def chi_line_bundle(engine: HRREngine, coeffs: dict[Edge, int], h: int = 0, p: int = 0) -> int:
    """chi(Omega^p(log) tensor O(sum a_V E_V + h Htilde)) by Riemann-Roch.

    ``coeffs`` maps nnc edges other than the origin to their coefficients;
    the origin may also appear, in which case its coefficient multiplies c.
    """
    ring = engine.ring
    gens = {}
    for edge, a in coeffs.items():
        if edge not in ring.edges:
            raise ValueError(f"{edge.describe()} is not a generator of the ring")
        gens[ring.index_of(edge)] = gens.get(ring.index_of(edge), 0) + a
    return engine.chi(p, engine.divisor_class(gens, h))


def chi_ring_hrr_n4(engine: HRREngine, A: Sequence[int], B: Sequence[int], C: int) -> int:
    """chi of the line bundle with c_1 = sum A_j a_j + sum B_k b_k + C c, by Riemann-Roch."""
    lines, pts, _ = incidence_n4(engine.lattice)
    coeffs = dict(zip(lines, A))
    coeffs.update(zip(pts, B))
    coeffs[engine.lattice.origin] = C
    return chi_line_bundle(engine, coeffs)
