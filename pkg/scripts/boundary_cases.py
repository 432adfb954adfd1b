#!/usr/bin/env python3
"""Boundary regression for G5: fixing player 1 to a pure action, solve
the restricted four-player game exactly and evaluate the sign of f_1 at
the resulting partial NE, showing player 1 never plays pure."""

from gmpy2 import mpq

from irradical.construct import make_named
from irradical.games import advantage_polys, approx_profile, restrict, solve_all_ne
from irradical.upoly import UPoly


def main() -> None:
    g5 = make_named("G5")
    f1 = advantage_polys(g5).polys[0]
    for value in (0, 1):
        rep = solve_all_ne(restrict(g5, 1, value))
        [eq] = rep.mixed_nes
        composed = f1.eval_upoly(
            [UPoly([mpq(0)])] + [eq.coordinate_polys[j] for j in range(4)]
        )
        sign = eq.parameter.sign_of(composed)
        print(f"x_1 = {value}: uniqueness {rep.uniqueness}, "
              f"sign f_1 = {'+' if sign > 0 else '-'}")
        for j, s in enumerate(approx_profile(rep, 12)):
            print(f"  x_{j+2} ~ {s}")
        better = "0" if sign > 0 else "1"
        print(f"  => player 1 strictly prefers action {better}; "
              f"x_1 = {value} is not part of any NE")


if __name__ == "__main__":
    main()
