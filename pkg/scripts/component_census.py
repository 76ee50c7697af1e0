#!/usr/bin/env python3
"""Sweep small (l, n, k) and tabulate the fixed-locus component census.

For each grid point: the number of components, the distribution of the
component ranks r, and the fixed-point counting identity
sum_gamma |P^(kl)[r_gamma]| = |P^l[n]|.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cmfix.partitions import enumerate_core_tuples, enumerate_multipartitions, msize


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lmax", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=4)
    ap.add_argument("--kmax", type=int, default=4)
    args = ap.parse_args()

    print(f"{'l':>2} {'n':>2} {'k':>2} {'#components':>11} {'ranks r':>16} {'sum |P^m[r]|':>12} {'|P^l[n]|':>9}")
    for l in range(1, args.lmax + 1):
        for n in range(1, args.nmax + 1):
            for k in range(2, args.kmax + 1):
                gammas = enumerate_core_tuples(k, l, n)
                ranks = sorted(((n - msize(g)) // k for g in gammas), reverse=True)
                total = sum(len(enumerate_multipartitions(k * l, r)) for r in ranks)
                target = len(enumerate_multipartitions(l, n))
                flag = "" if total == target else "  <-- MISMATCH"
                print(f"{l:>2} {n:>2} {k:>2} {len(gammas):>11} {str(ranks):>16} {total:>12} {target:>9}{flag}")
                if total != target:
                    return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
