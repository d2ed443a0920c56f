"""Closed-form conductor versus the filtration sum, case by case.

For Case1 and Case21 the two agree; for Case22 the closed form exceeds the
sum by 2*t1.  Prints the table and the resulting formal degrees.

    python scripts/conductor_gap.py --tmax 9 --f 1
"""

from __future__ import annotations

import argparse

from artschreier.gf2f import fq_new
from artschreier.ramify import BreakData, conductor, formal_degree


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tmax", type=int, default=9)
    ap.add_argument("--f", type=int, default=1)
    args = ap.parse_args()
    ctx = fq_new(args.f)

    odd = range(1, args.tmax + 1, 2)
    rows = [BreakData.case1(t) for t in odd] + [BreakData.case21(t) for t in odd]
    rows += [BreakData.case22(a, b) for a in odd for b in odd if a < b]
    print(f"{'break data':<14} {'closed':>6} {'sum':>6} {'gap':>4}  {'deg (closed)':>12} {'deg (sum)':>10}")
    for bd in rows:
        cp, cf = conductor(bd, "paper"), conductor(bd, "filtration")
        dp = formal_degree(bd, ctx)
        df = formal_degree(bd, ctx, conductor_source="filtration")
        print(f"{str(bd):<14} {str(cp):>6} {str(cf):>6} {str(cp - cf):>4}  {str(dp):>12} {str(df):>10}")


if __name__ == "__main__":
    main()
