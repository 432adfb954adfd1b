import random

import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from irradical.rat import rational
from irradical.upoly import (
    NEG_INF,
    POS_INF,
    AlgebraicNumber,
    IsolatingInterval,
    UPoly,
    algebraic_roots,
    count_real_roots,
    decimal_of_rational,
    format_upoly,
    isolate_roots,
    murty_certificate,
    parse_upoly,
    poly_divrem,
    poly_gcd,
    radical_form_deg2,
    rational_roots,
    sign_changes_at,
    squarefree,
    sturm_chain,
)

import goldens


def up(desc):
    """UPoly from a descending coefficient list (ints or strings)."""
    return UPoly([rational(str(c)) for c in desc][::-1])


G1 = up(goldens.G4_P[3])


# --- basic arithmetic / division ---


def test_eval_and_degree():
    f = up([1, -3, 2])  # x^2 - 3x + 2
    assert f.degree == 2
    assert f.eval(1) == 0 and f.eval(2) == 0 and f.eval(0) == 2


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6),
       st.lists(st.integers(-9, 9), min_size=1, max_size=6))
def test_divrem_identity(a, b):
    f, g = UPoly([mpq(c) for c in a]), UPoly([mpq(c) for c in b])
    if g.is_zero():
        return
    q, r = poly_divrem(f, g)
    assert (q * g + r - f).is_zero()
    assert r.is_zero() or r.degree < g.degree


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_gcd_divides_both(a, b, c):
    h = UPoly([mpq(x) for x in c])
    f = UPoly([mpq(x) for x in a]) * h
    g = UPoly([mpq(x) for x in b]) * h
    d = poly_gcd(f, g)
    if f.is_zero() and g.is_zero():
        return
    for p in (f, g):
        if not p.is_zero():
            _, r = poly_divrem(p, d)
            assert r.is_zero()


def test_squarefree_strips_multiplicity():
    f = up([1, -2, 1])  # (x-1)^2
    s = squarefree(f)
    assert s.degree == 1 and s.eval(1) == 0


# --- the appendix-grade Sturm goldens for g1 ---


def test_sturm_chain_matches_golden():
    chain = sturm_chain(G1)
    assert len(chain.polys) == len(goldens.G4_STURM_CHAIN)
    for got, want in zip(chain.polys, goldens.G4_STURM_CHAIN):
        assert list(got.coeffs) == list(up(want).coeffs)


def test_sturm_chain_evals_match_golden():
    chain = sturm_chain(G1)
    for point, wants in goldens.G4_STURM_EVALS.items():
        q = rational(point)
        for p, want in zip(chain.polys, wants):
            assert p.eval(q) == rational(want), (point, want)


def test_sturm_sign_changes_match_golden():
    chain = sturm_chain(G1)
    assert sign_changes_at(chain, NEG_INF) == goldens.G4_STURM_V["-inf"]
    assert sign_changes_at(chain, POS_INF) == goldens.G4_STURM_V["inf"]
    for point in ("3/10", "4/10", "5/10"):
        assert sign_changes_at(chain, rational(point)) == goldens.G4_STURM_V[point]


def test_g1_root_counts():
    assert count_real_roots(G1) == 2
    assert count_real_roots(G1, mpq(3, 10), mpq(4, 10)) == 1
    assert count_real_roots(G1, mpq(4, 10), mpq(5, 10)) == 1


def test_g1_r1_twelve_digit_bracket():
    lo = mpq(320065197644, 10**12)
    hi = mpq(320065197645, 10**12)
    assert count_real_roots(G1, lo, hi) == 1


# --- isolation and algebraic numbers ---


def test_isolate_roots_disjoint_and_exhaustive():
    ivs = isolate_roots(G1)
    assert len(ivs) == 2
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi <= b.lo
    for iv in ivs:
        assert count_real_roots(G1, iv.lo, iv.hi) == 1


def test_algebraic_number_decimal_round_half_even():
    # sqrt(2) = 1.41421356237309504880...
    f = up([1, 0, -2])
    a = algebraic_roots(f, 0, POS_INF)[0]
    assert a.decimal(5) == "1.41421"
    assert a.decimal(11) == "1.41421356237"


def test_decimal_of_rational_rounding():
    assert decimal_of_rational(mpq(1, 3), 4) == "0.3333"
    assert decimal_of_rational(mpq(2, 3), 4) == "0.6667"
    # exact ties round to even
    assert decimal_of_rational(mpq(1, 8), 2) == "0.12"
    assert decimal_of_rational(mpq(3, 8), 2) == "0.38"


def test_sign_of_zero_and_nonzero():
    f = up([1, 0, -2])
    a = algebraic_roots(f, 0, POS_INF)[0]
    assert a.sign_of(up([1, 0, -2])) == 0
    assert a.sign_of(up([1, -1])) == 1   # sqrt(2) - 1 > 0
    assert a.sign_of(up([1, -2])) == -1  # sqrt(2) - 2 < 0


def test_compare_rational_at_endpoint():
    # the isolating interval is half-open (lo, hi]; a root exactly at hi
    # must compare equal, not below
    f = up([1, -1, 0])  # x^2 - x, roots 0 and 1
    a = AlgebraicNumber(f, IsolatingInterval(mpq(1, 2), mpq(1)), None)
    assert a.compare_rational(1) == 0


def test_rational_roots():
    f = up([6, -5, 1]) * up([3, -1])  # roots 1/2, 1/3 (and 1/3 again from 3x-1)
    assert set(rational_roots(f)) == {mpq(1, 3), mpq(1, 2)}


# --- Murty certificates ---


@pytest.mark.parametrize("coeffs,want", list(zip(goldens.G4_P, goldens.G4_MURTY)))
def test_murty_certificates_match_golden(coeffs, want):
    m = murty_certificate(up(coeffs))
    w, v, h = want
    assert (m.witness, m.value, m.H) == (w, v, rational(h))


def test_murty_respects_h_plus_two():
    m = murty_certificate(up(goldens.G4_P[0]))
    assert m.witness >= m.H + 2


# --- radical forms ---


def test_radical_forms_of_g3():
    # P_2 has both roots in (0, 1); bracket each NE coordinate away from
    # the conjugate root
    brackets = [(0, 1), (mpq(1, 2), 1), (0, 1)]
    for coeffs, (lo, hi), (p, q, c) in zip(
        goldens.G3_P, brackets, goldens.G3_RADICALS
    ):
        f = up(coeffs)
        [a] = algebraic_roots(f, lo, hi)
        r = radical_form_deg2(a)
        assert (r.p, r.q, r.c) == (p, q, c)


def test_radical_form_rational_case():
    f = up([2, -1])  # 2x - 1
    a = algebraic_roots(f, 0, 1)[0]
    r = radical_form_deg2(a)
    assert (r.p, r.q) == (mpq(1, 2), 0)


# --- format / parse ---


@given(st.lists(st.integers(-99, 99), min_size=1, max_size=7))
def test_format_parse_roundtrip(coeffs):
    f = UPoly([mpq(c) for c in coeffs])
    assert list(parse_upoly(format_upoly(f, "y"), "y").coeffs) == list(f.coeffs)


# --- Sturm vs an independent oracle ---


def _sympy_real_root_count(coeffs_desc, lo, hi):
    """Count real roots in (lo, hi] via sympy's isolated CRootOf values."""
    x = sympy.symbols("x")
    expr = sum(sympy.Integer(c) * x**i for i, c in enumerate(coeffs_desc[::-1]))
    p = sympy.Poly(expr, x)
    if p.degree() < 1:
        return 0
    count = 0
    # real_roots repeats multiple roots; Sturm counts distinct ones
    for r in set(sympy.real_roots(p)):
        if (lo is None or r > sympy.Rational(lo)) and (
            hi is None or r <= sympy.Rational(hi)
        ):
            count += 1
    return count


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9),
       st.integers(-4, 3))
def test_root_counts_match_sympy(coeffs, a):
    f = UPoly([mpq(c) for c in coeffs[::-1]])
    if f.is_zero() or f.degree < 1:
        return
    b = a + 2
    assert count_real_roots(f) == _sympy_real_root_count(coeffs, None, None)
    assert count_real_roots(f, mpq(a), mpq(b)) == _sympy_real_root_count(coeffs, a, b)


def test_bisection_oracle_agreement_seeded():
    rng = random.Random(13)
    for _ in range(30):
        deg = rng.randrange(1, 9)
        coeffs = [rng.randrange(-30, 31) for _ in range(deg)] + [rng.randrange(1, 31)]
        f = UPoly([mpq(c) for c in coeffs])
        want = _sympy_real_root_count(coeffs[::-1], None, None)
        assert count_real_roots(f) == want
        ivs = isolate_roots(f)
        assert len(ivs) == want
