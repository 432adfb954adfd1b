import random

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, strategies as st

from irradical.rat import (
    format_rational,
    gcd_int,
    is_prime,
    mod_pow,
    rational,
    squarefree_part,
)


def test_rational_parsing():
    assert rational("3/7") == mpq(3, 7)
    assert rational("-2") == mpq(-2)
    assert rational("0.25") == mpq(1, 4)
    assert rational(mpq(5, 3)) == mpq(5, 3)


def test_format_rational_roundtrip():
    for s in ("0", "-7", "22/7", "-89/140"):
        assert format_rational(rational(s)) == s


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_gcd_matches_math(a, b):
    import math

    assert gcd_int(a, b) == math.gcd(a, b)


@given(st.integers(2, 10**9), st.integers(0, 10**6), st.integers(2, 10**9))
def test_mod_pow_matches_builtin(b, e, m):
    assert mod_pow(b, e, m) == pow(b, e, m)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}
    for n in range(-2, 32):
        assert is_prime(n) == (n in primes)


def test_is_prime_vs_sympy_random():
    rng = random.Random(20240824)
    for _ in range(300):
        n = rng.randrange(2, 10**12)
        assert is_prime(n) == sympy.isprime(n), n


def test_is_prime_murty_values():
    # the four large primality claims behind the Murty certificates
    for v in (167595301, 1504207909, 175397399, 13945135583):
        assert is_prime(v)
    assert not is_prime(167595301 * 3)


def test_is_prime_large_carmichael_like():
    # strong pseudoprime traps
    for n in (3215031751, 3825123056546413051):
        assert not is_prime(n)


@given(st.integers(1, 10**6))
def test_squarefree_part(n):
    s, core = squarefree_part(n)
    assert s * s * core == n
    assert all(e == 1 for e in sympy.factorint(core).values())


def test_squarefree_part_zero_sign_and_square():
    assert squarefree_part(0) == (1, 0)
    assert squarefree_part(36) == (6, 1)
    assert squarefree_part(-12) == (2, -3)
