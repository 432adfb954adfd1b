"""Sparse multivariate polynomials over exact rationals.

Lexicographic and degree-reverse-lexicographic monomial orders,
Buchberger's algorithm with reduced-basis output, FGLM order conversion
for zero-dimensional ideals, elimination to univariate generators, and
shape-position extraction for back-substitution.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from gmpy2 import mpq

from .rat import format_rational
from .upoly import UPoly

Monomial = tuple  # exponent tuple, one entry per variable


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


@dataclass(frozen=True)
class MonomialOrder:
    """lex or degrevlex order with an explicit variable precedence.

    permutation lists variable indices from most to least significant;
    e.g. lex with permutation (0, 1, 2, 3) is x1 > x2 > x3 > x4.
    """

    kind: str  # "lex" | "degrevlex"
    permutation: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if sorted(self.permutation) != list(range(len(self.permutation))):
            raise ValueError("permutation must be a bijection on variable indices")

    def key(self, m: Monomial):
        """Sort key: larger key = larger monomial."""
        if self.kind == "lex":
            return tuple(m[p] for p in self.permutation)
        return (sum(m), tuple(-m[p] for p in reversed(self.permutation)))

    @property
    def last_variable(self) -> int:
        return self.permutation[-1]


def lex_order(nvars: int, permutation: Optional[Sequence[int]] = None) -> MonomialOrder:
    perm = tuple(permutation) if permutation is not None else tuple(range(nvars))
    return MonomialOrder("lex", perm)


def degrevlex_order(
    nvars: int, permutation: Optional[Sequence[int]] = None
) -> MonomialOrder:
    perm = tuple(permutation) if permutation is not None else tuple(range(nvars))
    return MonomialOrder("degrevlex", perm)


class MPoly:
    """Sparse polynomial: dict monomial -> nonzero mpq coefficient."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        self.terms = {m: mpq(c) for m, c in terms.items() if c != 0}
        self.nvars = nvars

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls({}, nvars)

    @classmethod
    def constant(cls, c, nvars: int) -> "MPoly":
        return cls({(0,) * nvars: mpq(c)}, nvars)

    @classmethod
    def variable(cls, i: int, nvars: int) -> "MPoly":
        m = [0] * nvars
        m[i] = 1
        return cls({tuple(m): mpq(1)}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.nvars)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, mpq(0)) + c
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return MPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            other = MPoly.constant(other, self.nvars)
        return self + (-other)

    def __mul__(self, other) -> "MPoly":
        if not isinstance(other, MPoly):
            c = mpq(other)
            return MPoly({m: c * v for m, v in self.terms.items()}, self.nvars)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = out.get(m, mpq(0)) + c1 * c2
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return MPoly(out, self.nvars)

    __rmul__ = __mul__

    def scale_term(self, coeff, mono: Monomial) -> "MPoly":
        coeff = mpq(coeff)
        return MPoly(
            {mono_mul(m, mono): c * coeff for m, c in self.terms.items()}, self.nvars
        )

    def leading(self, order: MonomialOrder) -> tuple[Monomial, mpq]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def monic(self, order: MonomialOrder) -> "MPoly":
        _, c = self.leading(order)
        return self * (1 / c)

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=0)

    def variables_used(self) -> set[int]:
        return {i for m in self.terms for i in range(self.nvars) if m[i]}

    def substitute(self, values: dict) -> "MPoly":
        """Plug exact rationals in for some variables (indices -> values)."""
        out: dict = {}
        for m, c in self.terms.items():
            coeff = c
            new_m = list(m)
            for i, v in values.items():
                if m[i]:
                    coeff *= mpq(v) ** m[i]
                new_m[i] = 0
            key = tuple(new_m)
            val = out.get(key, mpq(0)) + coeff
            if val:
                out[key] = val
            elif key in out:
                del out[key]
        return MPoly(out, self.nvars)

    def eval(self, point: Sequence) -> mpq:
        acc = mpq(0)
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v *= mpq(point[i]) ** e
            acc += v
        return acc

    def eval_upoly(self, values: Sequence[UPoly]) -> UPoly:
        """Evaluate with univariate polynomials substituted for every variable."""
        acc = UPoly()
        for m, c in self.terms.items():
            term = UPoly([c])
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * values[i]
            acc = acc + term
        return acc

    def compress(self, keep: Sequence[int]) -> "MPoly":
        """Project onto the listed variables (all others must be absent)."""
        pos = {v: i for i, v in enumerate(keep)}
        out = {}
        for m, c in self.terms.items():
            new_m = [0] * len(keep)
            for i, e in enumerate(m):
                if e:
                    if i not in pos:
                        raise ValueError(f"variable {i} still present")
                    new_m[pos[i]] = e
            out[tuple(new_m)] = c
        return MPoly(out, len(keep))

    def expand(self, nvars: int, placement: Sequence[int]) -> "MPoly":
        """Inverse of compress: re-embed into nvars with vars at `placement`."""
        out = {}
        for m, c in self.terms.items():
            new_m = [0] * nvars
            for i, e in enumerate(m):
                new_m[placement[i]] = e
            out[tuple(new_m)] = c
        return MPoly(out, nvars)

    def to_upoly(self, var: int) -> UPoly:
        """Convert when univariate in `var` (error otherwise)."""
        coeffs = [mpq(0)] * (self.degree_in(var) + 1)
        for m, c in self.terms.items():
            if any(e and i != var for i, e in enumerate(m)):
                raise ValueError("polynomial is not univariate in the given variable")
            coeffs[m[var]] += c
        return UPoly(coeffs)

    @classmethod
    def from_upoly(cls, f: UPoly, var: int, nvars: int) -> "MPoly":
        out = {}
        for d, c in enumerate(f.coeffs):
            if c:
                m = [0] * nvars
                m[var] = d
                out[tuple(m)] = c
        return cls(out, nvars)

    def primitive_scaled(self) -> "MPoly":
        """Coprime integer coefficients, positive leading coeff under plain lex."""
        if not self.terms:
            return self
        den = 1
        for c in self.terms.values():
            d = int(c.denominator)
            den = den * d // __import__("math").gcd(den, d)
        ints = {m: int(c * den) for m, c in self.terms.items()}
        g = 0
        for v in ints.values():
            g = __import__("math").gcd(g, abs(v))
        lead = max(ints, key=lex_order(self.nvars).key)
        if ints[lead] < 0:
            g = -g
        return MPoly({m: mpq(v, g) for m, v in ints.items()}, self.nvars)

    def __repr__(self) -> str:
        return f"MPoly({format_mpoly(self)})"


def s_polynomial(f: MPoly, g: MPoly, order: MonomialOrder) -> MPoly:
    """lcm-cancellation combination eliminating both leading terms."""
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    l = mono_lcm(mf, mg)
    return f.scale_term(1 / cf, mono_div(l, mf)) - g.scale_term(1 / cg, mono_div(l, mg))


def normal_form(f: MPoly, basis: Sequence[MPoly], order: MonomialOrder) -> MPoly:
    """Full multivariate division remainder of f by the basis."""
    basis = [g for g in basis if g]
    if not basis:
        return f
    if any(g.nvars != f.nvars for g in basis):
        raise ValueError("variable-set mismatch between f and basis")
    leads = [g.leading(order) for g in basis]
    rem: dict = {}
    work = dict(f.terms)
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if c == 0:
            continue
        for g, (mg, cg) in zip(basis, leads):
            q = mono_div(m, mg)
            if q is not None:
                factor = c / cg
                for m2, c2 in g.terms.items():
                    key = mono_mul(m2, q)
                    v = work.get(key, mpq(0)) - factor * c2 if key != m else mpq(0)
                    if key == m:
                        continue
                    if v:
                        work[key] = v
                    elif key in work:
                        del work[key]
                break
        else:
            rem[m] = c
    return MPoly(rem, f.nvars)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, autoreduced, sorted by leading monomial."""

    generators: tuple[MPoly, ...]
    order: MonomialOrder
    reduced: bool = True

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and set(self.generators[0].terms) == {
            (0,) * self.generators[0].nvars
        }

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading(self.order)[0] for g in self.generators]

    def integer_cleared(self) -> list[MPoly]:
        return [g.primitive_scaled() for g in self.generators]


def _interreduce(gens: list[MPoly], order: MonomialOrder) -> list[MPoly]:
    gens = [g.monic(order) for g in gens if g]
    # drop generators whose leading monomial another one divides
    kept: list[MPoly] = []
    lms = [g.leading(order)[0] for g in gens]
    for i, g in enumerate(gens):
        lm = lms[i]
        if any(
            j != i
            and mono_div(lm, lms[j]) is not None
            and (mono_degree(lms[j]) < mono_degree(lm) or j < i or lms[j] != lm)
            for j in range(len(gens))
        ):
            continue
        kept.append(g)
    # fully reduce each by the others
    out = []
    for i, g in enumerate(kept):
        others = kept[:i] + kept[i + 1 :]
        r = normal_form(g, others, order) if others else g
        if r:
            out.append(r.monic(order))
    out.sort(key=lambda p: order.key(p.leading(order)[0]))
    return out


def _select_pair(pairs, lms, order, strategy: str):
    """Pick and remove one S-pair; 'normal' = smallest lcm degree then lcm key."""
    if strategy == "first":
        best = 0
    else:
        def rank(p):
            i, j = p
            l = mono_lcm(lms[i], lms[j])
            return (mono_degree(l), order.key(l))
        best = min(range(len(pairs)), key=lambda k: rank(pairs[k]))
    return pairs.pop(best)


def buchberger_direct(
    F: Sequence[MPoly], order: MonomialOrder, strategy: str = "normal"
) -> GroebnerBasis:
    """Plain Buchberger under the given order, reduced output.

    Uses the coprime-lcm and chain criteria to skip useless pairs; the
    output (monic reduced basis) is independent of the pair schedule.
    """
    gens = [f.monic(order) for f in F if f]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    G = list(gens)
    lms = [g.leading(order)[0] for g in G]
    pairs = [(i, j) for i in range(len(G)) for j in range(i + 1, len(G))]
    done: set[tuple] = set()
    while pairs:
        i, j = _select_pair(pairs, lms, order, strategy)
        done.add((i, j))
        li, lj = lms[i], lms[j]
        l = mono_lcm(li, lj)
        if l == mono_mul(li, lj):  # coprime criterion
            continue
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_div(l, lms[k]) is not None:
                p1 = (min(i, k), max(i, k))
                p2 = (min(j, k), max(j, k))
                if p1 in done and p2 in done:
                    chain = True
                    break
        if chain:
            continue
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if r:
            r = r.monic(order)
            k = len(G)
            G.append(r)
            lms.append(r.leading(order)[0])
            pairs.extend((m, k) for m in range(k))
    return GroebnerBasis(tuple(_interreduce(G, order)), order)


def _quotient_staircase(gb: GroebnerBasis) -> Optional[list[Monomial]]:
    """Monomials under the staircase, ordered; None if infinite (positive dim)."""
    lms = gb.leading_monomials()
    nvars = gb.generators[0].nvars
    caps = []
    for v in range(nvars):
        pure = [m[v] for m in lms if all(e == 0 for i, e in enumerate(m) if i != v)]
        if not pure:
            return None
        caps.append(min(pure))
    out = []
    for combo in itertools.product(*(range(c) for c in caps)):
        if all(mono_div(combo, lm) is None for lm in lms):
            out.append(combo)
    return out


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    return _quotient_staircase(gb) is not None


class _LinearSolver:
    """Incremental rational row reduction tracking dependency coefficients."""

    def __init__(self, columns: list):
        self.col_index = {c: i for i, c in enumerate(columns)}
        self.rows: list[list] = []  # echelon rows
        self.pivots: list[int] = []
        self.combos: list[list] = []  # expression of each echelon row in inputs
        self.count = 0

    def add(self, vec: dict):
        """Insert a vector; returns None if independent, else the dependency
        coefficients c_k with vec = sum c_k * input_k."""
        row = [mpq(0)] * len(self.col_index)
        for c, v in vec.items():
            row[self.col_index[c]] = v
        combo = [mpq(0)] * self.count + [mpq(1)]
        self.count += 1
        for prow, ppiv, pcombo in zip(self.rows, self.pivots, self.combos):
            if row[ppiv] != 0:
                f = row[ppiv]
                for k in range(len(row)):
                    row[k] -= f * prow[k]
                for k in range(len(pcombo)):
                    combo[k] -= f * pcombo[k]
        piv = next((k for k, v in enumerate(row) if v != 0), None)
        if piv is None:
            return combo[:-1]  # vec = -sum(combo_k * input_k) ... see caller
        inv = 1 / row[piv]
        row = [v * inv for v in row]
        combo = [v * inv for v in combo]
        while len(combo) < self.count:
            combo.append(mpq(0))
        self.rows.append(row)
        self.pivots.append(piv)
        self.combos.append(combo + [mpq(0)] * (self.count - len(combo)))
        return None


def fglm(gb: GroebnerBasis, target: MonomialOrder) -> GroebnerBasis:
    """Convert a zero-dimensional Groebner basis to the target order."""
    staircase = _quotient_staircase(gb)
    if staircase is None:
        raise ValueError("FGLM needs a zero-dimensional ideal")
    nvars = gb.generators[0].nvars
    dim = len(staircase)
    stair_set = set(staircase)
    prod_cache: dict = {}

    def nf_of_mono(m: Monomial) -> dict:
        if m in stair_set:
            return {m: mpq(1)}
        r = normal_form(MPoly({m: mpq(1)}, nvars), gb.generators, gb.order)
        return dict(r.terms)

    def multiply_nf(vec: dict, var: int) -> dict:
        out: dict = {}
        for m, c in vec.items():
            key = (var, m)
            if key not in prod_cache:
                shifted = list(m)
                shifted[var] += 1
                prod_cache[key] = nf_of_mono(tuple(shifted))
            for m2, c2 in prod_cache[key].items():
                v = out.get(m2, mpq(0)) + c * c2
                if v:
                    out[m2] = v
                elif m2 in out:
                    del out[m2]
        return out

    solver = _LinearSolver(staircase)
    new_gens: list[MPoly] = []
    new_lms: list[Monomial] = []
    processed: list[tuple[Monomial, dict]] = []
    inputs: list[Monomial] = []  # every monomial fed to the solver, in order
    start = (0,) * nvars
    heap = [(target.key(start), start, None, None)]
    seen = {start}
    while heap:
        _, mono, parent_idx, via_var = heapq.heappop(heap)
        if any(mono_div(mono, lm) is not None for lm in new_lms):
            continue
        if parent_idx is None:
            vec = nf_of_mono(mono)
        else:
            vec = multiply_nf(processed[parent_idx][1], via_var)
        inputs.append(mono)
        dep = solver.add(vec)
        if dep is None:
            idx = len(processed)
            processed.append((mono, vec))
            if len(processed) > dim:
                raise AssertionError("FGLM staircase overflow")
            for v in range(nvars):
                nm = list(mono)
                nm[v] += 1
                nm = tuple(nm)
                if nm not in seen:
                    seen.add(nm)
                    heapq.heappush(heap, (target.key(nm), nm, idx, v))
        else:
            # mono + sum dep_k * input_k  is in the ideal
            terms = {mono: mpq(1)}
            for c, pm in zip(dep, inputs[:-1]):
                if c:
                    v = terms.get(pm, mpq(0)) + c
                    if v:
                        terms[pm] = v
                    elif pm in terms:
                        del terms[pm]
            g = MPoly(terms, nvars)
            new_gens.append(g)
            new_lms.append(mono)
        if len(processed) == dim and not heap:
            break
    return GroebnerBasis(tuple(_interreduce(new_gens, target)), target)


def buchberger(
    F: Sequence[MPoly], order: MonomialOrder, strategy: str = "normal"
) -> GroebnerBasis:
    """Reduced Groebner basis of <F> under `order`.

    For lex targets the computation runs in degrevlex first and converts
    with FGLM when the ideal is zero-dimensional; this is what makes the
    26-dimensional quotient of the 5-player system tractable.  The
    reduced basis is canonical, so the route does not affect the output.
    """
    gens = [f for f in F if f]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    if order.kind == "lex" and len(gens) > 1:
        drl = buchberger_direct(gens, degrevlex_order(gens[0].nvars, order.permutation))
        if drl.is_unit_ideal():
            return GroebnerBasis(drl.generators, order)
        if is_zero_dimensional(drl):
            return fglm(drl, order)
    return buchberger_direct(gens, order, strategy)


def eliminate_to_univariate(F: Sequence[MPoly], keep: int) -> UPoly:
    """Univariate generator in variable `keep` of the elimination ideal.

    Runs a lex basis with `keep` last; raises if the ideal has no
    univariate generator there (positive-dimensional in the kept
    direction).
    """
    gens = [f for f in F if f]
    if not gens:
        raise ValueError("empty system")
    nvars = gens[0].nvars
    perm = [i for i in range(nvars) if i != keep] + [keep]
    gb = buchberger(gens, lex_order(nvars, perm))
    for g in gb.generators:
        if g.variables_used() <= {keep}:
            return g.to_upoly(keep).primitive()
    raise PositiveDimensionalError(
        f"no univariate generator in variable {keep}; ideal is positive-dimensional"
    )


class PositiveDimensionalError(ValueError):
    """The elimination ideal has no univariate generator."""


@dataclass(frozen=True)
class ShapePosition:
    """Basis shape: one univariate generator in the last variable plus one
    linear rule a_j * x_j + h_j(x_last) = 0 per remaining variable."""

    last_variable: int
    univariate: UPoly
    linear_rules: dict  # var index -> (a_j: mpq, h_j: UPoly)

    def coordinate_poly(self, var: int) -> UPoly:
        """x_var as a polynomial in the last variable."""
        if var == self.last_variable:
            return UPoly([0, 1])
        a, h = self.linear_rules[var]
        return h.scale(-1 / a)


def shape_extract(basis: GroebnerBasis) -> Optional[ShapePosition]:
    """Extract shape position, or None when the basis is not in shape."""
    last = basis.order.last_variable
    nvars = basis.generators[0].nvars
    univariate = None
    rules = {}
    for g in basis.generators:
        used = g.variables_used()
        if used <= {last}:
            if univariate is not None:
                return None
            univariate = g.to_upoly(last)
            continue
        extra = used - {last}
        if len(extra) != 1:
            return None
        v = extra.pop()
        if g.degree_in(v) != 1 or v in rules:
            return None
        a = mpq(0)
        h_terms = {}
        ok = True
        for m, c in g.terms.items():
            if m[v] == 1:
                if any(e and i != v for i, e in enumerate(m)):
                    ok = False
                    break
                a = c
            else:
                h_terms[m] = c
        if not ok or a == 0:
            return None
        h = MPoly(h_terms, nvars).to_upoly(last)
        rules[v] = (a, h)
    if univariate is None:
        return None
    expected = {i for i in range(nvars)} - {last}
    if set(rules) != expected:
        return None
    return ShapePosition(last, univariate, rules)


# --- text form ---


def format_mpoly(f: MPoly, names: Optional[Sequence[str]] = None) -> str:
    if f.is_zero():
        return "0"
    if names is None:
        names = [f"x{i+1}" for i in range(f.nvars)]
    order = lex_order(f.nvars)
    parts = []
    for m in sorted(f.terms, key=order.key, reverse=True):
        c = f.terms[m]
        factors = []
        for i, e in enumerate(m):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        mono_s = "*".join(factors)
        mag = format_rational(abs(c))
        if mono_s:
            term = mono_s if abs(c) == 1 else f"{mag}*{mono_s}"
        else:
            term = mag
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def parse_mpoly(text: str, names: Sequence[str]) -> MPoly:
    """Parse "3*x1^2*x2 - 1" style with the given variable names."""
    nvars = len(names)
    index = {n: i for i, n in enumerate(names)}
    s = text.replace("-", "+-").replace(" ", "")
    out: dict = {}
    for term in (t for t in s.split("+") if t):
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        coeff = mpq(1)
        mono = [0] * nvars
        for factor in term.split("*"):
            if not factor:
                continue
            name, _, exp = factor.partition("^")
            if name in index:
                mono[index[name]] += int(exp) if exp else 1
            else:
                coeff *= mpq(factor if "^" not in factor else name)
        if neg:
            coeff = -coeff
        key = tuple(mono)
        v = out.get(key, mpq(0)) + coeff
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return MPoly(out, nvars)
