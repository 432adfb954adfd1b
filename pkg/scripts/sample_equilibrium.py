#!/usr/bin/env python3
"""Draw exact equilibrium play from G4 and compare empirical
frequencies with the certified decimals.  Each Bernoulli draw compares
a dyadic uniform prefix against the coordinate's isolating interval, so
the sampling distribution is exactly the algebraic equilibrium."""

import sys

from gmpy2 import mpq

from irradical.construct import solve_named
from irradical.games import approx_profile
from irradical.sampler import BitSource, bernoulli
from irradical.upoly import refine_root


def main() -> None:
    draws = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0

    rep = solve_named("G4")
    profile = [refine_root(p, mpq(1, 2**40)) for p in rep.unique_equilibrium()]
    src = BitSource(seed)
    counts = [0] * len(profile)
    for _ in range(draws):
        for i, p in enumerate(profile):
            action, _ = bernoulli(p, src)
            if action == 0:
                counts[i] += 1

    decimals = approx_profile(rep, 8)
    print(f"draws: {draws}  seed: {seed}  bits consumed: {src.bits_consumed}")
    for i, (c, d) in enumerate(zip(counts, decimals)):
        print(f"  x_{i+1}: empirical {c / draws:.5f}  exact ~ {d}")


if __name__ == "__main__":
    main()
