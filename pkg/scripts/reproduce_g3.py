#!/usr/bin/env python3
"""Reproduce the three-player analysis: unique fully mixed NE of G3,
its minimal polynomials, and the exact radical closed forms."""

import time

from irradical.construct import make_named
from irradical.games import approx_profile, solve_all_ne
from irradical.upoly import format_upoly, radical_form_deg2


def main() -> None:
    t0 = time.perf_counter()
    rep = solve_all_ne(make_named("G3"))
    elapsed = time.perf_counter() - t0

    print(f"pure NEs: {len(rep.pure_nes)}")
    print("deviation table (profile -> strictly improving players):")
    for prof, players in rep.deviation_table.entries:
        print("  " + "".join(map(str, prof)) + " -> "
              + ",".join(map(str, sorted(players))))

    [eq] = rep.mixed_nes
    print(f"uniqueness: {rep.uniqueness}")
    for j, (d, coord) in enumerate(zip(eq.defining, eq.profile)):
        r = radical_form_deg2(coord)
        print(f"  P_{j+1}(y) = {format_upoly(d, 'y')}    x_{j+1} = {r}")
    for j, s in enumerate(approx_profile(rep, 12)):
        print(f"  x_{j+1} ~ {s}")
    print(f"elapsed: {elapsed:.3f}s")


if __name__ == "__main__":
    main()
