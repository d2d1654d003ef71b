"""Timed cross-check of all routes on seeded random arrangements."""

import argparse
import time

from arrspec.harness import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--trials", type=int, default=50)
    ap.add_argument("--dmax", type=int, default=9)
    ap.add_argument("--n", type=int, nargs="+", default=[3, 4])
    args = ap.parse_args()
    ok = True
    for n in args.n:
        dmax = args.dmax if n == 3 else min(args.dmax, 7)
        t0 = time.perf_counter()
        rep = verify(args.seed, args.trials, dmax, n)
        print("\n".join(rep.lines()))
        print(f"  ({time.perf_counter() - t0:.1f}s)")
        ok &= rep.ok
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
