"""Central hyperplane arrangements with multiplicities."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Sequence

from .linalg import fmt_rational, parse_rational, primitive_integer_vector, rank, rref

if TYPE_CHECKING:
    from .lattice import Edge


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple[int, ...]
    mult: int = 1


@dataclass(frozen=True)
class Arrangement:
    """Hyperplanes through the origin of Q^n, given by their normals.

    Normals are stored in canonical form (coprime integers, first nonzero
    entry positive) so proportional normals compare equal.
    """

    n: int
    hyperplanes: tuple[Hyperplane, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ArrangementError("dimension must be >= 1")
        seen = {}
        for i, h in enumerate(self.hyperplanes):
            if len(h.normal) != self.n:
                raise ArrangementError(
                    f"dimension mismatch: hyperplane {i} has {len(h.normal)} entries, expected {self.n}")
            if not any(h.normal):
                raise ArrangementError(f"zero normal (hyperplane {i})")
            if h.mult < 1:
                raise ArrangementError(f"multiplicity must be >= 1 (hyperplane {i})")
            if primitive_integer_vector(h.normal) != h.normal:
                raise ArrangementError(f"normal {i} is not in canonical form; use Arrangement.from_normals")
            if h.normal in seen:
                raise ArrangementError(
                    f"duplicate (proportional) normals: hyperplanes {seen[h.normal]} and {i}")
            seen[h.normal] = i

    @classmethod
    def from_normals(cls, n: int, normals: Sequence[Sequence], mults: Sequence[int] | None = None):
        if mults is None:
            mults = [1] * len(normals)
        if len(mults) != len(normals):
            raise ArrangementError("normals and multiplicities differ in length")
        hs = []
        for i, (v, m) in enumerate(zip(normals, mults)):
            if len(v) != n:
                raise ArrangementError(
                    f"dimension mismatch: hyperplane {i} has {len(v)} entries, expected {n}")
            try:
                canon = primitive_integer_vector(v)
            except ValueError:
                raise ArrangementError(f"zero normal (hyperplane {i})") from None
            if not isinstance(m, int) or isinstance(m, bool):
                raise ArrangementError(f"multiplicity must be an integer (hyperplane {i})")
            hs.append(Hyperplane(canon, m))
        return cls(n, tuple(hs))

    @property
    def d(self) -> int:
        return sum(h.mult for h in self.hyperplanes)

    @property
    def d_red(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> list[tuple[int, ...]]:
        return [h.normal for h in self.hyperplanes]

    @property
    def mults(self) -> list[int]:
        return [h.mult for h in self.hyperplanes]

    @property
    def is_reduced(self) -> bool:
        return all(h.mult == 1 for h in self.hyperplanes)

    @property
    def is_essential(self) -> bool:
        return rank(self.normals) == self.n if self.hyperplanes else False

    def to_record(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "hyperplanes": [
                {"normal": [fmt_rational(x) for x in h.normal], "mult": h.mult}
                for h in self.hyperplanes
            ],
        }

    def transform(self, matrix: Sequence[Sequence]) -> "Arrangement":
        """Pull back along x -> matrix @ x: each linear form g becomes g o matrix."""
        new = []
        for h in self.hyperplanes:
            new.append([sum(h.normal[i] * matrix[i][j] for i in range(self.n))
                        for j in range(self.n)])
        return Arrangement.from_normals(self.n, new, self.mults)


def parse_arrangement(text: str | dict) -> Arrangement:
    """Read the JSON input record ``{"n": int, "hyperplanes": [{"normal": [...], "mult": int}]}``."""
    if isinstance(text, str):
        try:
            rec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ArrangementError(f"malformed record: {exc}") from None
    else:
        rec = text
    if not isinstance(rec, dict) or "n" not in rec or "hyperplanes" not in rec:
        raise ArrangementError("record needs keys 'n' and 'hyperplanes'")
    n = rec["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ArrangementError("'n' must be a positive integer")
    normals, mults = [], []
    for i, h in enumerate(rec["hyperplanes"]):
        raw = h.get("normal") if isinstance(h, dict) else None
        if not isinstance(raw, list):
            raise ArrangementError(f"hyperplane {i}: 'normal' must be a list of rational strings")
        try:
            normals.append([parse_rational(x) for x in raw])
        except ValueError as exc:
            raise ArrangementError(f"hyperplane {i}: {exc}") from None
        mults.append(h.get("mult", 1))
    return Arrangement.from_normals(n, normals, mults)


def serialize(arr: Arrangement, indent: int | None = None) -> str:
    return json.dumps(arr.to_record(), indent=indent)


@dataclass(frozen=True)
class ValidationReport:
    essential: bool
    d: int
    d_red: int
    warnings: tuple[str, ...] = field(default_factory=tuple)


def validate(arr: Arrangement) -> ValidationReport:
    warnings = []
    if arr.d_red <= arr.n:
        warnings.append("deg D_red <= n: the arrangement is a normal crossing divisor")
    ess = arr.is_essential
    if not ess:
        warnings.append("arrangement is not essential")
    return ValidationReport(ess, arr.d, arr.d_red, tuple(warnings))


def reduce(arr: Arrangement) -> Arrangement:
    return Arrangement(arr.n, tuple(Hyperplane(h.normal, 1) for h in arr.hyperplanes))


def quotient(arr: Arrangement, edge: "Edge") -> Arrangement:
    """The arrangement of hyperplanes containing ``edge``, seen in X/edge.

    Coordinates on X/edge are the pivot columns of the edge's equation
    matrix in reduced row echelon form.
    """
    if edge.n != arr.n or any(i >= arr.d_red for i in edge.hyperplanes):
        raise ArrangementError("edge does not belong to this arrangement")
    eq, pivots = rref(edge.eqns)
    containing = tuple(i for i, h in enumerate(arr.hyperplanes)
                       if rank(list(edge.eqns) + [h.normal]) == len(pivots))
    if containing != tuple(edge.hyperplanes):
        raise ArrangementError("edge does not belong to this arrangement")
    normals, mults = [], []
    for i in edge.hyperplanes:
        h = arr.hyperplanes[i]
        normals.append([h.normal[c] for c in pivots])
        mults.append(h.mult)
    return Arrangement.from_normals(len(pivots), normals, mults)
