import random

import pytest
import sympy
from gmpy2 import mpq

from irradical.mpoly import (
    GroebnerBasis,
    MPoly,
    buchberger,
    buchberger_direct,
    degrevlex_order,
    eliminate_to_univariate,
    fglm,
    format_mpoly,
    is_zero_dimensional,
    lex_order,
    normal_form,
    parse_mpoly,
    s_polynomial,
    shape_extract,
)
from irradical.upoly import UPoly

import goldens

X4 = ["x1", "x2", "x3", "x4"]


def _g4_system():
    return [parse_mpoly(s, X4) for s in goldens.G4_F]


def _expected_g4_basis():
    out = []
    for spec in goldens.G4_LEX_BASIS:
        terms = {}
        tail = spec["x4^"]
        deg = len(tail) - 1
        for i, c in enumerate(tail):
            if c:
                terms[(0, 0, 0, deg - i)] = mpq(c)
        for var, idx in (("x1", 0), ("x2", 1), ("x3", 2)):
            if var in spec:
                m = [0, 0, 0, 0]
                m[idx] = 1
                terms[tuple(m)] = mpq(spec[var])
        out.append(MPoly(terms, 4))
    return out


def _same_polys(got, want):
    return sorted(g.terms.items() for g in got) == sorted(
        w.terms.items() for w in want
    )


# --- goldens ---


def test_g4_lex_basis_matches_golden():
    gb = buchberger(_g4_system(), lex_order(4))
    assert _same_polys(gb.integer_cleared(), _expected_g4_basis())


def test_g4_lex_basis_direct_matches_fglm_route():
    F = _g4_system()
    via_fglm = buchberger(F, lex_order(4))
    direct = buchberger_direct(F, lex_order(4))
    assert [g.terms for g in via_fglm.generators] == [
        g.terms for g in direct.generators
    ]


def test_g4_shape_position():
    gb = buchberger(_g4_system(), lex_order(4))
    shape = shape_extract(gb)
    assert shape is not None
    assert shape.last_variable == 3
    assert shape.univariate.primitive().coeffs == UPoly(
        [mpq(c) for c in goldens.G4_P[3][::-1]]
    ).coeffs


# --- algebraic properties ---


def _random_system(rng, nvars=3, ngens=3, max_deg=2, span=4):
    polys = []
    for _ in range(ngens):
        terms = {}
        for _ in range(rng.randrange(2, 5)):
            m = tuple(rng.randrange(0, max_deg + 1) for _ in range(nvars))
            if sum(m) > max_deg + 1:
                continue
            terms[m] = mpq(rng.randrange(-span, span + 1))
        p = MPoly(terms, nvars)
        if p:
            polys.append(p)
    return polys or [MPoly.variable(0, nvars)]


def test_buchberger_schedule_independence_sample():
    rng = random.Random(7)
    for _ in range(10):
        F = _random_system(rng)
        order = degrevlex_order(3)
        normal = buchberger_direct(F, order, strategy="normal")
        first = buchberger_direct(F, order, strategy="first")
        shuffled = buchberger_direct(list(reversed(F)), order, strategy="normal")
        assert [g.terms for g in normal.generators] == [
            g.terms for g in first.generators
        ]
        assert [g.terms for g in normal.generators] == [
            g.terms for g in shuffled.generators
        ]


def test_groebner_postcondition_spolys_reduce_to_zero():
    rng = random.Random(11)
    for _ in range(5):
        F = _random_system(rng)
        order = degrevlex_order(3)
        gb = buchberger_direct(F, order)
        G = list(gb.generators)
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                s = s_polynomial(G[i], G[j], order)
                assert not normal_form(s, G, order)
        # every input generator lies in the ideal
        for f in F:
            assert not normal_form(f, G, order)


def test_fglm_agrees_with_direct_lex():
    rng = random.Random(23)
    done = 0
    while done < 5:
        F = _random_system(rng)
        drl = buchberger_direct(F, degrevlex_order(3))
        if drl.is_unit_ideal() or not is_zero_dimensional(drl):
            continue
        done += 1
        lex = lex_order(3)
        assert [g.terms for g in fglm(drl, lex).generators] == [
            g.terms for g in buchberger_direct(F, lex).generators
        ]


def _to_sympy(p, syms):
    expr = 0
    for m, c in p.terms.items():
        t = sympy.Rational(str(c))
        for s, e in zip(syms, m):
            t *= s**e
        expr += t
    return expr


def test_lex_elimination_matches_sympy():
    syms = sympy.symbols("x1 x2 x3 x4")
    F = _g4_system()
    gb = sympy.groebner([_to_sympy(f, syms) for f in F], *syms, order="lex")
    sympy_uni = [g for g in gb.exprs if g.free_symbols <= {syms[3]}]
    assert len(sympy_uni) == 1
    want = sympy.Poly(sympy_uni[0], syms[3]).primitive()[1].all_coeffs()
    got = eliminate_to_univariate(F, 3).primitive()
    assert [int(c) for c in got.int_coeffs()[::-1]] == [int(c) for c in want]


def test_unit_ideal_detection():
    one_sys = [parse_mpoly("x1 - 1", X4), parse_mpoly("x1 - 2", X4)]
    gb = buchberger_direct(one_sys, degrevlex_order(4))
    assert gb.is_unit_ideal()


def test_normal_form_is_linear_and_idempotent():
    rng = random.Random(5)
    F = _random_system(rng)
    order = degrevlex_order(3)
    gb = buchberger_direct(F, order)
    G = list(gb.generators)
    [p] = _random_system(rng, ngens=1)
    [q] = _random_system(rng, ngens=1)
    np_, nq = normal_form(p, G, order), normal_form(q, G, order)
    assert normal_form(p + q, G, order).terms == (np_ + nq).terms
    assert normal_form(np_, G, order).terms == np_.terms


def test_format_parse_roundtrip():
    rng = random.Random(3)
    for _ in range(20):
        [p] = _random_system(rng, ngens=1)
        text = format_mpoly(p, ["x1", "x2", "x3"])
        assert parse_mpoly(text, ["x1", "x2", "x3"]).terms == p.terms


def test_integer_cleared_primitive_positive_leading():
    gb = buchberger(_g4_system(), lex_order(4))
    for g in gb.integer_cleared():
        coeffs = list(g.terms.values())
        assert all(c.denominator == 1 for c in coeffs)
        lead = g.leading(lex_order(4))[1]
        assert lead > 0
