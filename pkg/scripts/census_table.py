"""Plane census of V_nmax for several residue fields, with formal degrees.

    python scripts/census_table.py --fmax 3 --nmax 5
"""

from __future__ import annotations

import argparse
import time

from artschreier.errors import BudgetExceeded
from artschreier.gf2f import fq_new
from artschreier.ramify import MAX_ENUM_DIM, census_tallies


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--fmax", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=5)
    args = ap.parse_args()

    print(f"{'f':>2} {'n':>2} {'dim':>4} {'planes':>10}  {'break data':<14} {'count':>10} {'alpha':>7} {'degree':>10}  secs")
    for f in range(1, args.fmax + 1):
        ctx = fq_new(f)
        for n in range(1, args.nmax + 1, 2):
            t0 = time.perf_counter()
            try:
                rec = census_tallies(ctx, n)
            except BudgetExceeded:
                print(f"{f:>2} {n:>2}  dim > {MAX_ENUM_DIM}, skipped")
                break
            dt = time.perf_counter() - t0
            first = True
            for t in rec["tallies"]:
                bd = t["case"] + "(" + ", ".join(map(str, t["breaks"])) + ")"
                alpha = f"{t['conductor_paper']}/{t['conductor_filtration']}"
                head = f"{f:>2} {n:>2} {rec['dim']:>4} {rec['total_planes']:>10}" if first else " " * 21
                tail = f"  {dt:.2f}" if first else ""
                print(f"{head}  {bd:<14} {t['count']:>10} {alpha:>7} {t['formal_degree']:>10}{tail}")
                first = False


if __name__ == "__main__":
    main()
