"""Galois-group certificates via Dedekind's theorem.

Polynomial arithmetic over word-sized prime fields, distinct-degree
factorization degree patterns (= Frobenius cycle types for good primes),
and sufficient-condition certificates that the Galois group of an
irreducible polynomial is the full symmetric group; degree >= 5 plus S_n
then certifies that the roots are irradical (S_n is unsolvable).

Two certificate templates:

* transposition: patterns (n-1, 1) and (2, 1^{n-2}); transitive group
  with an (n-1)-cycle and a transposition is S_n.  The transposition
  class has density ~ n^2/(2 * n!) -- fine for small n, hopeless for
  n = 26.
* jordan: irreducibility witness (full-degree pattern), a q-cycle
  pattern (q, 1^{n-q}) for a prime q with n/2 < q <= n-3, and any
  odd-signed pattern.  A transitive group with a prime cycle longer
  than n/2 is primitive; by Jordan's theorem a primitive group with a
  p-cycle, p <= n-3 prime, contains A_n; the odd witness rules out A_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from gmpy2 import mpq

from .rat import is_prime
from .upoly import UPoly


class BadPrimeError(ValueError):
    """p divides a denominator or the leading coefficient."""


@dataclass(frozen=True)
class ModPoly:
    """Dense polynomial over F_p, coefficients ascending, normalized."""

    modulus: int
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] % self.modulus == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(v % self.modulus for v in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def monic(self) -> "ModPoly":
        if self.is_zero():
            return self
        inv = pow(self.coeffs[-1], -1, self.modulus)
        return ModPoly(self.modulus, tuple(v * inv % self.modulus for v in self.coeffs))

    def __add__(self, other: "ModPoly") -> "ModPoly":
        p = self.modulus
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] = (out[i] + v) % p
        return ModPoly(p, tuple(out))

    def __sub__(self, other: "ModPoly") -> "ModPoly":
        p = self.modulus
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, v in enumerate(other.coeffs):
            out[i] = (out[i] - v) % p
        return ModPoly(p, tuple(out))

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        if self.is_zero() or other.is_zero():
            return ModPoly(self.modulus, ())
        p = self.modulus
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return ModPoly(p, tuple(v % p for v in out))

    def __mod__(self, other: "ModPoly") -> "ModPoly":
        if other.is_zero():
            raise ZeroDivisionError("mod by zero polynomial")
        p = self.modulus
        d = other.monic()
        r = list(self.coeffs)
        while len(r) >= len(d.coeffs):
            lead = r[-1] % p
            if lead:
                shift = len(r) - len(d.coeffs)
                for i, v in enumerate(d.coeffs):
                    r[shift + i] = (r[shift + i] - lead * v) % p
            r.pop()
        return ModPoly(p, tuple(r))

    def derivative(self) -> "ModPoly":
        return ModPoly(
            self.modulus, tuple(i * v % self.modulus for i, v in enumerate(self.coeffs))[1:]
        )


def mod_gcd(a: ModPoly, b: ModPoly) -> ModPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def mod_pow_poly(base: ModPoly, exp: int, modpoly: ModPoly) -> ModPoly:
    result = ModPoly(base.modulus, (1,))
    base = base % modpoly
    while exp:
        if exp & 1:
            result = (result * base) % modpoly
        base = (base * base) % modpoly
        exp >>= 1
    return result


def reduce_mod_p(f: UPoly, p: int) -> ModPoly:
    """Integer-cleared coefficients reduced mod p; degree must survive."""
    ints = f.int_coeffs()
    if ints[-1] % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient")
    return ModPoly(p, tuple(c % p for c in ints))


@dataclass(frozen=True)
class CycleType:
    """Multiset of factor degrees of f mod p = cycle type of Frobenius."""

    parts: tuple  # sorted descending

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(sorted(self.parts, reverse=True)))

    @property
    def degree(self) -> int:
        return sum(self.parts)

    def is_odd_permutation(self) -> bool:
        """Sign = (-1)^(n - #cycles); odd iff that exponent is odd."""
        return (self.degree - len(self.parts)) % 2 == 1


def degree_pattern(f: ModPoly) -> Optional[CycleType]:
    """Distinct-degree factorization pattern, or None if f is not squarefree.

    For d = 1, 2, ...: gcd(f, x^{p^d} - x) collects all irreducible
    factors of degree d; x^{p^d} is built by repeated Frobenius powering
    modulo f.
    """
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = f.monic()
    if mod_gcd(f, f.derivative()).degree > 0:
        return None
    p = f.modulus
    parts = []
    x = ModPoly(p, (0, 1))
    frob = x
    remaining = f
    d = 0
    while remaining.degree > 0:
        d += 1
        if 2 * d > remaining.degree:
            parts.extend([remaining.degree])
            break
        frob = mod_pow_poly(frob, p, f)  # x^{p^d} mod f
        g = mod_gcd(remaining, (frob % remaining) - (x % remaining))
        if g.degree > 0:
            parts.extend([d] * (g.degree // d))
            remaining_coeffs = _mod_divide_exact(remaining, g)
            remaining = remaining_coeffs
    return CycleType(tuple(parts))


def _mod_divide_exact(a: ModPoly, b: ModPoly) -> ModPoly:
    """a / b when the division is exact."""
    p = a.modulus
    b = b.monic()
    r = list(a.monic().coeffs)
    q = [0] * (len(r) - len(b.coeffs) + 1)
    while len(r) >= len(b.coeffs):
        lead = r[-1] % p
        shift = len(r) - len(b.coeffs)
        q[shift] = lead
        if lead:
            for i, v in enumerate(b.coeffs):
                r[shift + i] = (r[shift + i] - lead * v) % p
        r.pop()
    return ModPoly(p, tuple(q))


@dataclass(frozen=True)
class IrreducibleModPCertificate:
    """f is irreducible mod p (full-degree pattern), hence irreducible over Q."""

    prime: int
    degree: int
    kind: str = "irreducible-mod-p"


@dataclass(frozen=True)
class SnCertificate:
    """Evidence that Gal(f) = S_n.

    template "transposition": (n-1,1) + (2,1^{n-2}) patterns.
    template "jordan": prime q-cycle pattern with n/2 < q <= n-3 plus an
    odd-signed pattern; needs prime_irreducible (or an external
    irreducibility certificate) for transitivity.
    """

    degree: int
    template: str
    prime_irreducible: Optional[int] = None
    prime_ncycle_minus1: Optional[int] = None
    prime_transposition: Optional[int] = None
    prime_qcycle: Optional[int] = None
    qcycle_length: Optional[int] = None
    prime_odd: Optional[int] = None
    odd_pattern: Optional[tuple] = None
    patterns_seen: tuple = field(default=(), compare=False)


def _prime_stream(bound: int, start: int = 2):
    n = start
    while n <= bound:
        if is_prime(n):
            yield n
        n += 1


def _bad_prime(f: UPoly, p: int) -> bool:
    return f.int_coeffs()[-1] % p == 0


def irreducible_mod_p_certificate(
    f: UPoly, prime_bound: int = 100_000
) -> Optional[IrreducibleModPCertificate]:
    """Smallest good prime with full-degree pattern, if any below the bound."""
    n = f.degree
    for p in _prime_stream(prime_bound):
        if _bad_prime(f, p):
            continue
        pattern = degree_pattern(reduce_mod_p(f, p))
        if pattern is not None and pattern.parts == (n,):
            return IrreducibleModPCertificate(p, n)
    return None


def sn_certificate(f: UPoly, prime_bound: int = 100_000) -> Optional[SnCertificate]:
    """Scan primes for an S_n certificate; None when inconclusive.

    Tries the spec's transposition template first; for degrees where the
    transposition class is too sparse to ever appear (its density decays
    like n^2/n!), falls back to the Jordan template.  Soundness of both
    relies on f being irreducible over Q; the jordan template carries
    its own mod-p irreducibility witness, the transposition template
    requires the caller to hold one (Murty, rational-root, or mod-p).
    """
    n = f.degree
    if n < 2:
        return None
    target_ncycle = tuple(sorted((n - 1, 1), reverse=True))
    target_transposition = tuple(sorted([2] + [1] * (n - 2), reverse=True))
    jordan_qs = [q for q in range(n - 3, n // 2, -1) if is_prime(q)]
    found: dict = {}
    seen = []
    for p in _prime_stream(prime_bound):
        if _bad_prime(f, p):
            continue
        pattern = degree_pattern(reduce_mod_p(f, p))
        if pattern is None:
            continue
        seen.append((p, pattern.parts))
        if pattern.parts == (n,):
            found.setdefault("irreducible", p)
        if pattern.parts == target_ncycle:
            found.setdefault("ncycle", p)
        if pattern.parts == target_transposition:
            found.setdefault("transposition", p)
        if len(pattern.parts) == n - max(pattern.parts) + 1 and max(pattern.parts) in jordan_qs:
            found.setdefault("qcycle", (p, max(pattern.parts)))
        if pattern.is_odd_permutation():
            found.setdefault("odd", (p, pattern.parts))
        if "ncycle" in found and "transposition" in found:
            return SnCertificate(
                n,
                "transposition",
                prime_irreducible=found.get("irreducible"),
                prime_ncycle_minus1=found["ncycle"],
                prime_transposition=found["transposition"],
                patterns_seen=tuple(seen),
            )
        if n > 8 and {"irreducible", "qcycle", "odd"} <= found.keys():
            qp, q = found["qcycle"]
            op, opat = found["odd"]
            return SnCertificate(
                n,
                "jordan",
                prime_irreducible=found["irreducible"],
                prime_qcycle=qp,
                qcycle_length=q,
                prime_odd=op,
                odd_pattern=opat,
                patterns_seen=tuple(seen),
            )
    return None


@dataclass(frozen=True)
class IrradicalityVerdict:
    verdict: str  # "irradical" | "radical-expressible" | "unknown"
    degree: int
    evidence: Optional[object] = None  # SnCertificate for irradical verdicts
    note: str = ""


def irradicality_verdict(a, prime_bound: int = 100_000) -> IrradicalityVerdict:
    """Radical-expressibility of an algebraic number.

    Degree <= 4 minimal polynomials are classically solvable; degree
    >= 5 with a full symmetric Galois group is not (A_n simple).  The
    defining polynomial must carry an irreducibility certificate so
    that it really is the minimal polynomial.
    """
    f = a.defining
    if a.irreducibility_certificate is None:
        cert = irreducible_mod_p_certificate(f, prime_bound)
        if cert is None:
            raise ValueError(
                "defining polynomial lacks an irreducibility certificate"
            )
    else:
        cert = a.irreducibility_certificate
    n = f.degree
    if n <= 4:
        return IrradicalityVerdict(
            "radical-expressible", n, None,
            "degree <= 4: solvable by classical radical formulas",
        )
    sn = sn_certificate(f, prime_bound)
    if sn is not None:
        return IrradicalityVerdict(
            "irradical", n, sn,
            f"irreducible of degree {n} with Galois group S_{n} (unsolvable)",
        )
    return IrradicalityVerdict(
        "unknown", n, None, "no S_n certificate found below the prime bound"
    )
