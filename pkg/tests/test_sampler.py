import math

import pytest
from gmpy2 import mpq

from irradical.construct import solve_named
from irradical.sampler import BitSource, bernoulli, sample_profile
from irradical.upoly import UPoly, algebraic_roots


def test_bitsource_deterministic():
    s1, s2 = BitSource(123), BitSource(123)
    assert [s1.next_bit() for _ in range(64)] == [s2.next_bit() for _ in range(64)]
    s3 = BitSource(124)
    assert [BitSource(123).next_bit() for _ in range(64)] != [
        s3.next_bit() for _ in range(64)
    ]


def test_bits_consumed_counts():
    src = BitSource(0)
    for _ in range(10):
        src.next_bit()
    assert src.bits_consumed == 10


def test_bernoulli_p_zero_and_one():
    src = BitSource(5)
    for _ in range(20):
        action, _ = bernoulli(mpq(0), src)
        assert action == 1  # never action 0
    for _ in range(20):
        action, _ = bernoulli(mpq(1), src)
        assert action == 0


def test_bernoulli_half_matches_single_bit():
    """p = 1/2 consumes exactly one bit and mirrors it: U in [0,1/2)
    exactly when the first bit is 0."""
    src, mirror = BitSource(77), BitSource(77)
    for _ in range(100):
        action, trace = bernoulli(mpq(1, 2), src)
        assert trace.bits == 1
        assert action == mirror.next_bit()


def test_bernoulli_trace_verdict_consistent():
    """Replaying the consumed bits must bracket U strictly on the
    decided side of p."""
    src, mirror = BitSource(99), BitSource(99)
    for _ in range(200):
        action, trace = bernoulli(mpq(3, 7), src)
        assert trace.bits >= 1
        u_lo = mpq(0)
        for k in range(trace.bits):
            u_lo += mpq(mirror.next_bit()) / 2 ** (k + 1)
        u_hi = u_lo + mpq(1, 2**trace.bits)
        if action == 0:
            assert trace.verdict == "below" and u_hi <= mpq(3, 7)
        else:
            assert trace.verdict == "above" and u_lo >= mpq(3, 7)


def test_bernoulli_algebraic_number():
    # p = 1/sqrt(2) ~ 0.7071..., root of 2x^2 - 1
    f = UPoly([mpq(-1), mpq(0), mpq(2)])
    [p] = algebraic_roots(f, 0, 1)
    src = BitSource(2024)
    n = 20_000
    hits = sum(1 - bernoulli(p, src)[0] for _ in range(n))
    mean = hits / n
    sigma = math.sqrt(0.7071 * (1 - 0.7071) / n)
    assert abs(mean - 0.70710678) < 4 * sigma
    assert src.bits_consumed >= n  # at least one bit per draw


def test_bernoulli_rational_frequency():
    src = BitSource(7)
    n = 20_000
    hits = sum(1 - bernoulli(mpq(1, 3), src)[0] for _ in range(n))
    p = 1 / 3
    sigma = math.sqrt(p * (1 - p) / n)
    assert abs(hits / n - p) < 4 * sigma


def test_sample_profile_g3():
    report = solve_named("G3")
    src = BitSource(1)
    draws = [sample_profile(report, src) for _ in range(50)]
    assert all(len(d) == 3 and set(d) <= {0, 1} for d in draws)
    # identical seed reproduces the sequence exactly
    src2 = BitSource(1)
    assert draws == [sample_profile(report, src2) for _ in range(50)]
