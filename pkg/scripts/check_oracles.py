#!/usr/bin/env python3
"""Independent numerical cross-checks for the pinned decimal goldens.

Uses mpmath's polynomial root finder at 60 significant digits — a code
path sharing nothing with the package's Sturm machinery — to confirm
the round-half-even decimals recorded in tests/goldens.py, including
the coordinates whose published decimals differ in the last digit."""

import sys
from pathlib import Path

import mpmath

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
import goldens  # noqa: E402

mpmath.mp.dps = 60


def roots_in_unit_interval(desc):
    rs = mpmath.polyroots([mpmath.mpf(c) for c in desc], maxsteps=200,
                          extraprec=200)
    return sorted(
        mpmath.re(r) for r in rs
        if abs(mpmath.im(r)) < mpmath.mpf("1e-40") and 0 < mpmath.re(r) < 1
    )


def main() -> None:
    failures = 0

    print("G4 coordinates (60-digit oracle vs 12-digit pins):")
    # coordinate roots, one per minimal polynomial; x2's polynomial has a
    # single root in (0,1) for each of P_1..P_4
    for j, desc in enumerate(goldens.G4_P):
        roots = roots_in_unit_interval(desc)
        pin = goldens.G4_DECIMALS_EXACT[j]
        match = [r for r in roots if abs(r - mpmath.mpf(pin)) < 1e-11]
        ok = len(match) == 1
        failures += not ok
        shown = mpmath.nstr(match[0], 18) if match else "none"
        print(f"  x_{j+1}: pin {pin}  oracle {shown}  {'ok' if ok else 'MISMATCH'}")

    print("G5 coordinates (10-digit pins):")
    for j, desc in enumerate(goldens.G5_P):
        roots = roots_in_unit_interval(desc)
        pin = goldens.G5_DECIMALS[j]
        match = [r for r in roots if abs(r - mpmath.mpf(pin)) < 1e-9]
        ok = len(match) == 1
        failures += not ok
        print(f"  x_{j+1}: pin {pin}  {'ok' if ok else 'MISMATCH'}")

    print("published decimals that differ from the exact values:")
    for label, claimed, exact in (
        ("G4 x_2", goldens.G4_DECIMALS_CLAIMED[1], goldens.G4_DECIMALS_EXACT[1]),
        ("G4 x_4", goldens.G4_DECIMALS_CLAIMED[3], goldens.G4_DECIMALS_EXACT[3]),
        ("case-1 x_2", goldens.G5_CASE1_CLAIMED[0], goldens.G5_CASE1_EXACT[0]),
        ("case-1 x_3", goldens.G5_CASE1_CLAIMED[1], goldens.G5_CASE1_EXACT[1]),
    ):
        print(f"  {label}: published {claimed}, exact rounds to {exact}")

    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
