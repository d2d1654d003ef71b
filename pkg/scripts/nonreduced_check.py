"""Riemann-Roch spectrum of weighted arrangements against the vanishing-order oracle.

For each random arrangement with multiplicities, compares the two routes on
(0, 1] and checks the sum rule on the full Riemann-Roch table.
"""

import argparse
import random

from arrspec.arrangement import Arrangement
from arrspec.examples import random_arrangement
from arrspec.lattice import build
from arrspec.spectrum import check_sum_rule, compare_tables, spectrum_hrr, spectrum_unit_general


def weighted(rng, n, dmax, mmax):
    base = random_arrangement(rng, n, dmax)
    return Arrangement.from_normals(n, [h.normal for h in base.hyperplanes],
                                    [rng.randint(1, mmax) for _ in base.hyperplanes])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=3)
    ap.add_argument("--trials", type=int, default=25)
    ap.add_argument("--mmax", type=int, default=3)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for t in range(args.trials):
        n = rng.choice((2, 3, 4))
        arr = weighted(rng, n, 6 if n < 4 else 5, args.mmax)
        lat = build(arr)
        hrr = spectrum_hrr(arr)
        diffs = compare_tables(spectrum_unit_general(arr, lat), hrr)
        rule = check_sum_rule(hrr, lat)
        ok = not diffs and rule.ok
        bad += not ok
        mults = [h.mult for h in arr.hyperplanes]
        print(f"{t:>3} n={n} d={arr.d:<3} mults={mults} {'ok' if ok else f'diff={diffs} sum={rule.violations}'}")
    print(f"{args.trials - bad}/{args.trials} agree")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
