"""Built-in arrangements and seeded random generators."""

from __future__ import annotations

import random
import re

from .arrangement import Arrangement, ArrangementError
from .linalg import primitive_integer_vector

MUSTATA_7 = [[1, -1, 0], [1, 1, 0], [1, 0, -1], [1, 0, 1], [0, 1, -1], [0, 1, 1], [0, 0, 1]]
N4_DEMO = [[1, 0, 0, 0], [0, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]

BUILTIN_NAMES = ("mustata-7", "boolean-N", "generic-N-D", "n4-demo")
ENTRY_RANGE = (-3, 3)


def mustata_7() -> Arrangement:
    """(x^2-y^2)(x^2-z^2)(y^2-z^2)z: six triple points and three double points in P^2."""
    return Arrangement.from_normals(3, MUSTATA_7)


def n4_demo() -> Arrangement:
    """xy(x-y)zw in 4-space."""
    return Arrangement.from_normals(4, N4_DEMO)


def boolean(n: int) -> Arrangement:
    return Arrangement.from_normals(n, [[int(i == j) for j in range(n)] for i in range(n)])


def generic(n: int, d: int, seed: int = 0) -> Arrangement:
    """d hyperplanes with normals on the moment curve (1, t, ..., t^(n-1)).

    Distinct t make every n of the normals independent, so all proper
    intersections are normal crossings.
    """
    if d < 1:
        raise ArrangementError("need at least one hyperplane")
    rng = random.Random(seed)
    ts = rng.sample(range(-4 * d - 8, 4 * d + 9), d)
    return Arrangement.from_normals(n, [[t ** k for k in range(n)] for t in ts])


def builtin(name: str, seed: int = 0) -> Arrangement:
    if name == "mustata-7":
        return mustata_7()
    if name == "n4-demo":
        return n4_demo()
    m = re.fullmatch(r"boolean-(\d+)", name)
    if m:
        return boolean(int(m.group(1)))
    m = re.fullmatch(r"generic-(\d+)-(\d+)", name)
    if m:
        return generic(int(m.group(1)), int(m.group(2)), seed)
    raise ArrangementError(f"unknown example {name!r}; choose from {', '.join(BUILTIN_NAMES)}")


def random_arrangement(rng: random.Random, n: int, dmax: int, dmin: int | None = None,
                       max_tries: int = 1000) -> Arrangement:
    """Reduced essential arrangement with integer normal entries in ENTRY_RANGE.

    Zero, proportional and non-essential draws are rejected and redrawn, so the
    output depends only on the generator state.
    """
    lo, hi = ENTRY_RANGE
    dmin = n + 1 if dmin is None else dmin
    if dmax < dmin:
        raise ValueError(f"dmax={dmax} is below the minimum degree {dmin}")
    for _ in range(max_tries):
        d = rng.randint(dmin, dmax)
        normals, seen = [], set()
        while len(normals) < d:
            v = [rng.randint(lo, hi) for _ in range(n)]
            if not any(v):
                continue
            key = primitive_integer_vector(v)
            if key in seen:
                continue
            seen.add(key)
            normals.append(list(key))
        arr = Arrangement.from_normals(n, normals)
        if arr.is_essential:
            return arr
    raise RuntimeError("could not draw an essential arrangement")
