"""Dense univariate polynomials over exact rationals.

Provides arithmetic, Sturm chains, real-root counting / isolation /
refinement, rational-root and Murty irreducibility tests, and closed
radical forms for degree <= 2.  Root intervals are half-open (lo, hi]
with rational endpoints throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from gmpy2 import mpq, mpz

from .rat import DivisionByZero, format_rational, is_prime, squarefree_part

NEG_INF = float("-inf")
POS_INF = float("inf")


def _sign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


class UPoly:
    """Polynomial with mpq coefficients, ascending order, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = ()):
        cs = [mpq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_int_coeffs(cls, coeffs: Sequence[int]) -> "UPoly":
        return cls(coeffs)

    @classmethod
    def x_power(cls, k: int, coeff=1) -> "UPoly":
        return cls([0] * k + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            return mpq(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, UPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "UPoly") -> "UPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UPoly(out)

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __sub__(self, other: "UPoly") -> "UPoly":
        return self + (-other)

    def __mul__(self, other) -> "UPoly":
        if not isinstance(other, UPoly):
            return UPoly([c * mpq(other) for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UPoly()
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "UPoly":
        return UPoly([mpq(c) * a for a in self.coeffs])

    def eval(self, a):
        """Exact value by Horner's rule."""
        a = mpq(a)
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> "UPoly":
        return UPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UPoly":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return UPoly([c / lead for c in self.coeffs])

    def primitive(self) -> "UPoly":
        """Integer-cleared, content-stripped form with positive leading coeff."""
        if not self.coeffs:
            return self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(int(den), int(c.denominator))
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        if ints[-1] < 0:
            g = -g
        return UPoly([v // g for v in ints])

    def int_coeffs(self) -> list[int]:
        p = self.primitive()
        return [int(c) for c in p.coeffs]

    def sign_at_infinity(self, positive: bool) -> int:
        """Sign convention at +/-inf: leading sign, times (-1)^deg at -inf."""
        if not self.coeffs:
            return 0
        s = _sign(self.coeffs[-1])
        if not positive and self.degree % 2 == 1:
            s = -s
        return s

    def __repr__(self) -> str:
        return f"UPoly({format_upoly(self)})"


def poly_divrem(f: UPoly, g: UPoly) -> tuple[UPoly, UPoly]:
    """Exact division with remainder: f = q*g + r, deg r < deg g."""
    if g.is_zero():
        raise DivisionByZero("polynomial division by zero")
    r = list(f.coeffs)
    dg = g.degree
    lead = g.coeffs[-1]
    if len(r) <= dg:
        return UPoly(), f
    q = [mpq(0)] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        if r[i] == 0:
            continue
        c = r[i] / lead
        q[i - dg] = c
        for j, gc in enumerate(g.coeffs):
            r[i - dg + j] -= c * gc
    return UPoly(q), UPoly(r)


def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd by the Euclidean algorithm (monic-normalized each step)."""
    a, b = f, g
    while not b.is_zero():
        _, r = poly_divrem(a, b)
        a, b = b, r.monic() if not r.is_zero() else r
    return a.monic()


def squarefree(f: UPoly) -> UPoly:
    """Squarefree part f / gcd(f, f'), in primitive integer form."""
    if f.degree <= 0:
        return f.primitive()
    g = poly_gcd(f, f.derivative())
    if g.degree == 0:
        return f.primitive()
    q, _ = poly_divrem(f, g)
    return q.primitive()


@dataclass(frozen=True)
class SturmChain:
    """Negated-remainder sequence p_0 = f, p_1 = f', p_{k+1} = -rem(p_{k-1}, p_k).

    Entries are stored unscaled so the chain matches hand computations
    coefficient for coefficient.
    """

    polys: tuple[UPoly, ...]

    def sign_changes_at(self, a) -> int:
        """V(a): sign alternations in the chain at a, ignoring zeros.

        a may be a rational or +/-inf (float('inf') sentinels).
        """
        if a == POS_INF:
            signs = [p.sign_at_infinity(True) for p in self.polys]
        elif a == NEG_INF:
            signs = [p.sign_at_infinity(False) for p in self.polys]
        else:
            signs = [_sign(p.eval(a)) for p in self.polys]
        signs = [s for s in signs if s != 0]
        return sum(1 for x, y in zip(signs, signs[1:]) if x != y)

    def count_roots(self, lo, hi) -> int:
        """Number of real roots of p_0 in (lo, hi] (p_0 squarefree)."""
        return self.sign_changes_at(lo) - self.sign_changes_at(hi)


def sturm_chain(f: UPoly) -> SturmChain:
    if f.is_zero():
        raise ValueError("Sturm chain of the zero polynomial")
    polys = [f, f.derivative()]
    if polys[-1].is_zero():
        polys.pop()
    while polys[-1].degree > 0:
        _, r = poly_divrem(polys[-2], polys[-1])
        if r.is_zero():
            break  # non-squarefree input: chain ends at the gcd
        polys.append(-r)
    return SturmChain(tuple(polys))


def sign_changes_at(chain: SturmChain, a) -> int:
    return chain.sign_changes_at(a)


def cauchy_bound(f: UPoly) -> mpq:
    """B with all real roots of f in (-B, B)."""
    if f.degree < 0:
        raise ValueError("zero polynomial has no root bound")
    lead = abs(f.coeffs[-1])
    m = max((abs(c) for c in f.coeffs[:-1]), default=mpq(0))
    return 1 + m / lead


def interval_eval(f: UPoly, lo, hi) -> tuple:
    """Enclosure of {f(t) : lo <= t <= hi} by Horner interval arithmetic."""
    lo, hi = mpq(lo), mpq(hi)
    a, b = mpq(0), mpq(0)
    for c in reversed(f.coeffs):
        cands = (a * lo, a * hi, b * lo, b * hi)
        a, b = min(cands) + c, max(cands) + c
    return a, b


def count_real_roots(f: UPoly, lo=NEG_INF, hi=POS_INF) -> int:
    """Exact number of distinct real roots of f in (lo, hi]."""
    fs = squarefree(f)
    if fs.degree <= 0:
        return 0
    return sturm_chain(fs).count_roots(lo, hi)


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open interval (lo, hi] holding exactly one root of a tracked poly."""

    lo: mpq
    hi: mpq

    def __post_init__(self):
        object.__setattr__(self, "lo", mpq(self.lo))
        object.__setattr__(self, "hi", mpq(self.hi))
        if not self.lo < self.hi:
            raise ValueError("isolating interval needs lo < hi")

    @property
    def width(self) -> mpq:
        return self.hi - self.lo

    def midpoint(self) -> mpq:
        return (self.lo + self.hi) / 2

    def contains(self, q) -> bool:
        return self.lo < q <= self.hi


def _split_point(f: UPoly, lo, hi) -> mpq:
    """Rational midpoint, shifted off any root so endpoints stay root-free."""
    m = (lo + hi) / 2
    if f.eval(m) == 0:
        m = (lo + 2 * hi) / 3
    return m


def isolate_roots(f: UPoly, lo=NEG_INF, hi=POS_INF) -> list[IsolatingInterval]:
    """Disjoint isolating intervals covering all real roots of f in (lo, hi].

    Works on the squarefree part; Sturm-count bisection from the Cauchy
    root bound.
    """
    fs = squarefree(f)
    if fs.degree <= 0:
        return []
    chain = sturm_chain(fs)
    bound = cauchy_bound(fs)
    a = -bound if lo == NEG_INF else mpq(lo)
    b = bound if hi == POS_INF else mpq(hi)
    if a >= b:
        return []
    out = []
    va = chain.sign_changes_at(a)
    vb = chain.sign_changes_at(b)
    stack = [(a, b, va, vb)]
    while stack:
        x, y, vx, vy = stack.pop()
        n = vx - vy
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(x, y))
            continue
        m = _split_point(fs, x, y)
        vm = chain.sign_changes_at(m)
        stack.append((x, m, vx, vm))
        stack.append((m, y, vm, vy))
    out.sort(key=lambda iv: iv.lo)
    return out


@dataclass(frozen=True)
class AlgebraicNumber:
    """A real algebraic number: squarefree integer defining poly + isolating interval."""

    defining: UPoly
    interval: IsolatingInterval
    irreducibility_certificate: Optional[object] = field(default=None, compare=False)

    @classmethod
    def from_rational(cls, q) -> "AlgebraicNumber":
        q = mpq(q)
        p = UPoly([-q, 1]).primitive()
        return cls(p, IsolatingInterval(q - 1, q))

    def is_rational(self) -> bool:
        return self.defining.degree == 1

    def rational_value(self) -> mpq:
        if not self.is_rational():
            raise ValueError("not a degree-1 algebraic number")
        a, b = self.defining.coeffs
        return -a / b

    def refined(self, width) -> "AlgebraicNumber":
        """Same root, interval width <= width, by sign-guided bisection.

        One sign evaluation per step; the Sturm count over the interval
        stays 1 throughout (the single root never escapes).
        """
        f = self.defining
        lo, hi = self.interval.lo, self.interval.hi
        width = mpq(width)
        while hi - lo > width:
            if f.eval(hi) == 0:
                # the root is exactly hi; shrink from the left
                lo = (lo + hi) / 2
                continue
            s_hi = _sign(f.eval(hi))
            m = (lo + hi) / 2
            sm = _sign(f.eval(m))
            if sm == 0 or sm == s_hi:
                hi = m
            else:
                lo = m
        return AlgebraicNumber(
            f, IsolatingInterval(lo, hi), self.irreducibility_certificate
        )

    def refine_step(self) -> "AlgebraicNumber":
        return self.refined(self.interval.width / 2)

    def sign_of(self, h: UPoly, budget: int = 256):
        """Sign of h(alpha): 0 by exact gcd witness, else strict sign by refinement.

        Returns +1/0/-1, or None if the budget is exhausted without a
        decision (cannot happen when h(alpha) != 0 and the budget is
        large enough).
        """
        if h.is_zero():
            return 0
        if self.is_rational():
            return _sign(h.eval(self.rational_value()))
        g = poly_gcd(h, self.defining)
        if g.degree > 0:
            gs = g.primitive()
            if count_real_roots(gs, self.interval.lo, self.interval.hi) > 0:
                return 0
        hs = squarefree(h)
        h_chain = sturm_chain(hs) if hs.degree > 0 else None
        cur = self
        for _ in range(budget):
            lo, hi = cur.interval.lo, cur.interval.hi
            if h_chain is None or h_chain.count_roots(lo, hi) == 0:
                s = _sign(h.eval(hi))
                if s != 0:
                    return s
            cur = cur.refine_step()
        return None

    def compare_rational(self, q) -> int:
        """Sign of (alpha - q)."""
        q = mpq(q)
        if q > self.interval.hi:
            return -1
        if q <= self.interval.lo:
            return 1
        return self.sign_of(UPoly([-q, 1]))

    def decimal(self, digits: int) -> str:
        """Certified round-half-even decimal with `digits` fractional digits."""
        cur = self
        target = mpq(1, 2 * 10**digits)
        while True:
            cur = cur.refined(min(cur.interval.width / 2, target))
            s_lo = _round_decimal(cur.interval.lo, digits)
            s_hi = _round_decimal(cur.interval.hi, digits)
            if s_lo == s_hi:
                return s_lo


def refine_root(a: AlgebraicNumber, width) -> AlgebraicNumber:
    return a.refined(width)


def algebraic_roots(f: UPoly, lo=NEG_INF, hi=POS_INF) -> list[AlgebraicNumber]:
    fs = squarefree(f)
    return [AlgebraicNumber(fs, iv) for iv in isolate_roots(fs, lo, hi)]


def _round_decimal(q, digits: int) -> str:
    """Fixed-point round-half-even of an exact rational."""
    q = mpq(q)
    neg = q < 0
    scaled = abs(q) * 10**digits
    n = int(scaled)
    frac = scaled - n
    if frac > mpq(1, 2) or (frac == mpq(1, 2) and n % 2 == 1):
        n += 1
    if neg and n != 0:
        sign = "-"
    else:
        sign = ""
    s = str(n).rjust(digits + 1, "0")
    if digits == 0:
        return sign + s
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_of_rational(q, digits: int) -> str:
    return _round_decimal(q, digits)


# --- rational roots and irreducibility certificates ---


def _divisors(n: int) -> list[int]:
    n = abs(int(n))
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(f: UPoly) -> list[mpq]:
    """All rational roots, by divisor enumeration on the primitive form."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    p = f.primitive()
    coeffs = [int(c) for c in p.coeffs]
    roots = []
    k = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        k += 1
    if k:
        roots.append(mpq(0))
    if len(coeffs) <= 1:
        return roots
    a0, ad = coeffs[0], coeffs[-1]
    seen = set()
    for num in _divisors(a0):
        for den in _divisors(ad):
            for cand in (mpq(num, den), mpq(-num, den)):
                if cand in seen:
                    continue
                seen.add(cand)
                if f.eval(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


@dataclass(frozen=True)
class MurtyCertificate:
    """f(witness) = value is prime with witness >= H + 2, so f is irreducible."""

    witness: int
    value: int
    H: mpq

    kind: str = "murty"


def murty_certificate(
    f: UPoly, search_span: int = 10_000
) -> Optional[MurtyCertificate]:
    """Irreducibility by Murty's criterion.

    Searches n upward from ceil(H) + 2; succeeds when f(n) is prime.
    Returns None when the span is exhausted (inconclusive, not
    "reducible").
    """
    p = f.primitive()
    if p.degree < 1:
        raise ValueError("need degree >= 1")
    lead = abs(p.coeffs[-1])
    h = max((abs(c) for c in p.coeffs[:-1]), default=mpq(0)) / lead
    start = int(math.ceil(h)) + 2
    if mpq(start - 2) == h:
        start = int(h) + 2
    for n in range(start, start + search_span + 1):
        v = int(p.eval(n))
        if v > 1 and is_prime(v):
            return MurtyCertificate(witness=n, value=v, H=h)
    return None


@dataclass(frozen=True)
class RadicalForm:
    """Closed form p + q*sqrt(c) with c a squarefree integer."""

    p: mpq
    q: mpq
    c: int

    def __str__(self) -> str:
        if self.q == 0:
            return format_rational(self.p)
        sign = "-" if self.q < 0 else "+"
        return f"{format_rational(self.p)} {sign} {format_rational(abs(self.q))}*sqrt({self.c})"


def radical_form_deg2(a: AlgebraicNumber) -> RadicalForm:
    """Exact p + q*sqrt(c) for a root of a degree <= 2 defining polynomial."""
    f = a.defining
    if f.degree > 2:
        raise ValueError(f"unsupported degree {f.degree} for radical form")
    if f.degree == 1:
        return RadicalForm(a.rational_value(), mpq(0), 0)
    c0, c1, c2 = f.coeffs
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        raise ValueError("no real roots")
    # sqrt(disc) = sqrt(num*den)/den with num/den in lowest terms
    s, core = squarefree_part(int(disc.numerator * disc.denominator))
    base = -c1 / (2 * c2)
    radj = mpq(s, disc.denominator) / (2 * c2)
    if core == 0 or radj == 0:
        return RadicalForm(base, mpq(0), 0)
    # pick the branch inside the isolating interval
    for q in (radj, -radj):
        if _branch_in_interval(base, q, core, a.interval):
            return RadicalForm(base, q, core)
    raise AssertionError("neither quadratic branch lies in the isolating interval")


def _branch_in_interval(p, q, c: int, iv: IsolatingInterval) -> bool:
    """Exact test p + q*sqrt(c) in (lo, hi], via sign comparisons over Q."""

    def cmp_value_vs(t) -> int:
        # sign of (p + q*sqrt(c)) - t, exactly
        d = t - p
        if q > 0:
            # q*sqrt(c) vs d
            if d < 0:
                return 1
            return _sign(q * q * c - d * d)
        if d > 0:
            return -1
        return _sign(d * d - q * q * c)

    return cmp_value_vs(iv.lo) > 0 and cmp_value_vs(iv.hi) <= 0


# --- text form ---


def format_upoly(f: UPoly, var: str = "x") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for d in range(f.degree, -1, -1):
        c = f.coeffs[d]
        if c == 0:
            continue
        mag = format_rational(abs(c))
        if d == 0:
            term = mag
        else:
            xp = var if d == 1 else f"{var}^{d}"
            term = xp if abs(c) == 1 else f"{mag}*{xp}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def parse_upoly(text: str, var: str = "x") -> UPoly:
    """Parse "c_d*x^d + ... + c_0" with rational "a/b" coefficients."""
    s = text.replace("-", "+-").replace(" ", "")
    terms = [t for t in s.split("+") if t]
    coeffs: dict[int, mpq] = {}
    for term in terms:
        neg = term.startswith("-")
        if neg:
            term = term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            coeff = mpq(head.rstrip("*")) if head.rstrip("*") else mpq(1)
            deg = int(tail[1:]) if tail.startswith("^") else 1
        else:
            coeff = mpq(term)
            deg = 0
        if neg:
            coeff = -coeff
        coeffs[deg] = coeffs.get(deg, mpq(0)) + coeff
    if not coeffs:
        return UPoly()
    out = [mpq(0)] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return UPoly(out)
