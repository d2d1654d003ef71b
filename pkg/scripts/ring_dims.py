"""Graded dimensions of the cohomology ring and the integrals of Td and c_top."""

import argparse
import random

from arrspec.examples import builtin, random_arrangement
from arrspec.lattice import build
from arrspec.wonderful.classes import chern_total, todd_class
from arrspec.wonderful.hrr import build_ring


def row(name, arr):
    ring = build_ring(build(arr))
    td = ring.integrate(todd_class(ring))
    top = ring.integrate(chern_total(ring))
    print(f"{name:<18} n={arr.n} d={arr.d:<2} gens={ring.g:<3} dims={ring.graded_dims}  int Td={td}  int c_top={top}")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--random", type=int, default=5, help="random arrangements per dimension")
    args = ap.parse_args()
    for name in ("mustata-7", "n4-demo", "boolean-3", "generic-3-6", "generic-4-6"):
        row(name, builtin(name))
    rng = random.Random(args.seed)
    for n, dmax in ((3, 9), (4, 7)):
        for k in range(args.random):
            row(f"random-{n}-{k}", random_arrangement(rng, n, dmax))


if __name__ == "__main__":
    main()
