"""Exact Bernoulli sampling for algebraic probabilities.

A uniform variate U is revealed bit by bit as a shrinking dyadic
interval; the probability p sits in a Sturm-refined isolating interval.
Refining whichever interval is wider until they are disjoint decides
U < p exactly, so a draw returns action 0 with probability exactly p
while consuming only as much randomness (and Sturm work) as the
comparison requires.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Union

from gmpy2 import mpq

from .rat import rational
from .upoly import AlgebraicNumber


class BitSource:
    """Stream of independent fair bits; seedable for reproducibility."""

    def __init__(self, seed=None):
        self._rng = random.Random(seed)
        self.bits_consumed = 0

    def next_bit(self) -> int:
        self.bits_consumed += 1
        return self._rng.getrandbits(1)


@dataclass(frozen=True)
class SampleTrace:
    bits: int  # bits consumed by this draw (>= 1)
    verdict: str  # "below" (U < p, action 0) or "above"
    refinements: int  # Sturm refinement steps spent on p's interval


def bernoulli(p: Union[mpq, int, str, AlgebraicNumber], src: BitSource):
    """Draw action 0 with probability exactly p; returns (action, trace)."""
    if isinstance(p, AlgebraicNumber):
        if p.compare_rational(0) < 0 or p.compare_rational(1) > 0:
            raise ValueError("probability outside [0,1]")
        if p.is_rational():
            p = p.rational_value()
    else:
        p = rational(p)
        if not 0 <= p <= 1:
            raise ValueError("probability outside [0,1]")

    a = mpq(0)  # U in [a, a + 2^-k)
    scale = mpq(1)
    bits = 0
    refinements = 0
    cur = p
    while True:
        bit = src.next_bit()
        bits += 1
        scale /= 2
        if bit:
            a += scale
        b = a + scale
        while True:
            if isinstance(cur, AlgebraicNumber):
                p_lo, p_hi = cur.interval.lo, cur.interval.hi
            else:
                p_lo = p_hi = cur
            if b <= p_lo or (not isinstance(cur, AlgebraicNumber) and b <= p_hi):
                return 0, SampleTrace(bits, "below", refinements)
            if a >= p_hi:
                return 1, SampleTrace(bits, "above", refinements)
            if isinstance(cur, AlgebraicNumber) and cur.interval.width > scale:
                cur = cur.refine_step()
                refinements += 1
                continue
            break


def sample_profile(report, src: BitSource) -> tuple:
    """One pure action profile drawn from a report's unique equilibrium."""
    profile = report.unique_equilibrium()
    return tuple(bernoulli(p, src)[0] for p in profile)
