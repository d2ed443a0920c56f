"""Randomized checks of the symbol [a, b) beyond the test suite's sample sizes.

Counts violations of bilinearity in each slot, of [wp(y), b) = 0, and of
the unramified character b -> (-1)^v(b); prints a one-line summary per law.

    python scripts/symbol_laws.py --f 3 --trials 5000 --seed 1
"""

from __future__ import annotations

import argparse
import random

from artschreier.gf2f import fq_new
from artschreier.laurent import LaurentSeries, wp_apply
from artschreier.wpquot import WpCoset, as_symbol, filtration_dim


def rand_series(rng: random.Random, ctx, lo: int, hi: int) -> LaurentSeries:
    return LaurentSeries.from_terms(ctx, {e: rng.randrange(1, ctx.q) for e in range(lo, hi + 1) if rng.random() < 0.5})


def rand_nonzero(rng: random.Random, ctx) -> LaurentSeries:
    unit = rand_series(rng, ctx, 1, 8) + LaurentSeries.from_terms(ctx, {0: rng.randrange(1, ctx.q)})
    return unit.shift(rng.randint(-8, 8))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--f", type=int, default=2)
    ap.add_argument("--nmax", type=int, default=11, help="cosets are drawn from V_nmax")
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    ctx = fq_new(args.f)
    rng = random.Random(args.seed)
    d = filtration_dim(args.nmax, ctx)
    a0 = WpCoset.unramified(ctx)
    bad = {"additive in a": 0, "multiplicative in b": 0, "wp(K) pairs to 0": 0, "unramified character": 0}
    for _ in range(args.trials):
        u, v = WpCoset.from_mask(ctx, rng.randrange(1 << d)), WpCoset.from_mask(ctx, rng.randrange(1 << d))
        b1, b2 = rand_nonzero(rng, ctx), rand_nonzero(rng, ctx)
        bad["additive in a"] += as_symbol(u + v, b1) != as_symbol(u, b1) ^ as_symbol(v, b1)
        bad["multiplicative in b"] += as_symbol(u, b1 * b2) != as_symbol(u, b1) ^ as_symbol(u, b2)
        bad["wp(K) pairs to 0"] += as_symbol(wp_apply(rand_series(rng, ctx, -args.nmax, 6)), b1) != 0
        bad["unramified character"] += as_symbol(a0, b1) != b1.val % 2
    for law, n in bad.items():
        print(f"{law:<22} {args.trials - n}/{args.trials} hold")


if __name__ == "__main__":
    main()
