#!/usr/bin/env python3
"""Run the codimension-filtration check over a grid and print a summary.

Every component restriction morphism Z(C G(l,1,n)) ->> Z(C G(kl,1,r)) is
checked class sum by class sum; the script exits nonzero if any certificate
of violation shows up.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from cmfix.partitions import enumerate_core_tuples
from cmfix.wreath import verify_filtration


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--grid", default="1,2,2;1,3,2;1,4,2;2,2,2;2,3,2;3,2,2",
                    help="semicolon-separated l,n,k triples")
    ap.add_argument("--no-flat", action="store_true",
                    help="probe the unreversed interleaving convention instead")
    args = ap.parse_args()

    failures = 0
    for spec in args.grid.split(";"):
        l, n, k = (int(x) for x in spec.split(","))
        t0 = time.time()
        for gamma in enumerate_core_tuples(k, l, n):
            rep = verify_filtration(l, n, k, gamma, flat=not args.no_flat)
            mark = "ok " if rep.passed else "BAD"
            print(f"[{mark}] l={l} n={n} k={k} gamma={gamma} "
                  f"({rep.checked} classes, {time.time()-t0:.2f}s)")
            if not rep.passed:
                failures += 1
                for cert in rep.certificates:
                    print(f"      violates: class {cert[0]} (codim {cert[1]}) "
                          f"-> {cert[2]} (codim {cert[3]})")
    print(f"{failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
