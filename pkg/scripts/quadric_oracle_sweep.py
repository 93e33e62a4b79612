"""Compare the quadric classification against exhaustive search.

    python3 scripts/quadric_oracle_sweep.py --p 5 --n 4 --samples 200 --seed 0
"""

import argparse
import time
from collections import Counter

import numpy as np

from strengthlab.field import PrimeField
from strengthlab.poly import Ring, random_homogeneous
from strengthlab.strength import quadric_rank, quadric_strength, strength_search


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=5)
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--kmax", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    R = Ring(PrimeField(args.p), args.n)
    rng = np.random.default_rng(args.seed)
    table = Counter()
    mismatches = 0
    t0 = time.perf_counter()
    for _ in range(args.samples):
        f = random_homogeneous(R, 2, rng)
        a = quadric_strength(f).value
        b = strength_search(f, args.kmax)
        if not b.exact or b.value != a:
            mismatches += 1
            print("mismatch:", f, a, b.to_dict())
        table[(quadric_rank(f), a)] += 1
    dt = time.perf_counter() - t0
    print(f"F_{args.p}, n={args.n}: {args.samples} quadrics in {dt:.1f}s, mismatches={mismatches}")
    print("rank  strength  count")
    for (r, s), c in sorted(table.items()):
        print(f"{r:4d}  {s:8d}  {c:5d}")


if __name__ == "__main__":
    main()
