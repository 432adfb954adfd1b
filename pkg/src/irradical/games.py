"""Normal-form games with two actions per player.

Payoff tensors, advantage polynomials, pure-equilibrium enumeration with
deviation tables, player restriction, and full Nash-equilibrium
enumeration by support: each of the 3^n supports contributes a
polynomial face system (Lemma 2.1) solved exactly over the rationals.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from gmpy2 import mpq

from .rat import format_rational, rational
from .mpoly import (
    GroebnerBasis,
    MPoly,
    PositiveDimensionalError,
    buchberger_direct,
    degrevlex_order,
    fglm,
    is_zero_dimensional,
    lex_order,
    normal_form,
    shape_extract,
)
from .upoly import (
    NEG_INF,
    POS_INF,
    AlgebraicNumber,
    IsolatingInterval,
    UPoly,
    count_real_roots,
    decimal_of_rational,
    interval_eval,
    isolate_roots,
)

# Support entries
ZERO = "zero"  # x_i = 0: action 1 always
ONE = "one"  # x_i = 1: action 0 always
MIXED = "mixed"

Profile = tuple  # pure action profile, entries in {0, 1}
Support = tuple  # entries in {ZERO, ONE, MIXED}
Coordinate = Union[mpq, AlgebraicNumber]


def _profile_index(profile: Profile) -> int:
    idx = 0
    for a in profile:
        idx = idx * 2 + a
    return idx


def _profiles(n: int):
    return itertools.product((0, 1), repeat=n)


@dataclass(frozen=True)
class Game:
    """n players, two actions each; payoffs indexed by pure profile.

    The tensor is stored as a tuple of 2^n rows in lexicographic profile
    order (as in the figures); row k holds the n rational payoffs at the
    profile whose bits spell k.
    """

    n: int
    payoffs: tuple  # tuple of 2^n tuples of n mpq
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.payoffs) != 2**self.n:
            raise ValueError("payoff tensor must have 2^n rows")
        if any(len(row) != self.n for row in self.payoffs):
            raise ValueError("each row must list one payoff per player")

    @classmethod
    def from_table(cls, n: int, table: dict, name: str = "") -> "Game":
        rows = []
        for profile in _profiles(n):
            row = table[profile]
            rows.append(tuple(rational(v) for v in row))
        return cls(n, tuple(rows), name)

    def payoff(self, profile: Profile, player: int) -> mpq:
        """Payoff of `player` (1-based) at the pure profile."""
        return self.payoffs[_profile_index(profile)][player - 1]

    def row(self, profile: Profile) -> tuple:
        return self.payoffs[_profile_index(profile)]


@dataclass(frozen=True)
class AdvantagePolys:
    """f_i: expected advantage of action 0 over action 1 for player i,
    multilinear in the other players' probabilities x_j = P(action 0)."""

    n: int
    polys: tuple  # n MPoly in variables x_1..x_n (x_i absent from f_i)


def advantage_polys(g: Game) -> AdvantagePolys:
    n = g.n
    out = []
    for i in range(1, n + 1):
        f = MPoly.zero(n)
        for rest in _profiles(n - 1):
            lo = rest[: i - 1] + (0,) + rest[i - 1 :]
            hi = rest[: i - 1] + (1,) + rest[i - 1 :]
            diff = g.payoff(lo, i) - g.payoff(hi, i)
            if diff == 0:
                continue
            term = MPoly.constant(diff, n)
            for j, a in enumerate(rest):
                var = j if j < i - 1 else j + 1
                xj = MPoly.variable(var, n)
                term = term * (xj if a == 0 else MPoly.constant(1, n) - xj)
            f = f + term
        out.append(f)
    return AdvantagePolys(n, tuple(out))


def expected_payoffs(g: Game, x: Sequence) -> tuple:
    """Exact expected payoffs at an all-rational mixed profile."""
    probs = [rational(v) for v in x]
    if len(probs) != g.n:
        raise ValueError("profile length mismatch")
    totals = [mpq(0)] * g.n
    for profile in _profiles(g.n):
        w = mpq(1)
        for p, a in zip(probs, profile):
            w *= p if a == 0 else 1 - p
        if w == 0:
            continue
        row = g.row(profile)
        for i in range(g.n):
            totals[i] += w * row[i]
    return tuple(totals)


@dataclass(frozen=True)
class DeviationTable:
    """Per pure profile, the set of players (1-based) with a strictly
    profitable unilateral deviation; empty set = pure NE."""

    entries: tuple  # tuple of (profile, frozenset of players)

    def unsatisfied(self, profile: Profile) -> frozenset:
        return dict(self.entries)[tuple(profile)]


def pure_ne(g: Game) -> tuple[list, DeviationTable]:
    entries = []
    nes = []
    for profile in _profiles(g.n):
        bad = set()
        for i in range(1, g.n + 1):
            flipped = profile[: i - 1] + (1 - profile[i - 1],) + profile[i:]
            if g.payoff(flipped, i) > g.payoff(profile, i):
                bad.add(i)
        entries.append((profile, frozenset(bad)))
        if not bad:
            nes.append(profile)
    return nes, DeviationTable(tuple(entries))


def restrict(g: Game, player: int, value: int) -> Game:
    """Fix player's mixture x_player = value (0 or 1) and drop the player.

    value is the probability of action 0, so value 1 pins action 0 and
    value 0 pins action 1.  Remaining players keep their order.
    """
    if not 1 <= player <= g.n:
        raise ValueError("player index out of range")
    if value not in (0, 1):
        raise ValueError("value must be 0 or 1")
    if g.n < 2:
        raise ValueError("need at least 2 players to restrict")
    action = 1 - value
    rows = []
    for rest in _profiles(g.n - 1):
        full = rest[: player - 1] + (action,) + rest[player - 1 :]
        row = g.row(full)
        rows.append(tuple(row[: player - 1] + row[player:]))
    return Game(g.n - 1, tuple(rows), f"{g.name}|x{player}={value}" if g.name else "")


# --- faces ---


def face_system(ap: AdvantagePolys, s: Support):
    """Equations and sign conditions for a support (Lemma 2.1).

    Mixed players contribute f_i = 0 over the mixed variables; pure
    players contribute f_i <= 0 (Zero) or f_i >= 0 (One).
    """
    if len(s) != ap.n:
        raise ValueError("support length mismatch")
    fixed = {i: (mpq(0) if s[i] == ZERO else mpq(1)) for i in range(ap.n) if s[i] != MIXED}
    equations = [
        ap.polys[i].substitute(fixed) for i in range(ap.n) if s[i] == MIXED
    ]
    sign_conditions = [
        (i + 1, "-" if s[i] == ZERO else "+") for i in range(ap.n) if s[i] != MIXED
    ]
    return equations, sign_conditions


@dataclass
class FacePoint:
    """One zero-dimensional candidate on a face, in shape coordinates:
    every mixed variable is a polynomial in one base algebraic number."""

    support: Support
    mixed_vars: tuple  # 0-based variable indices
    parameter: AlgebraicNumber
    coordinate_polys: dict  # 0-based var -> UPoly in the parameter
    coords: tuple = ()  # filled by back-substitution

    def coordinate(self, var: int):
        return self.coords[var]


@dataclass
class FaceOutcome:
    support: Support
    status: str  # "no-solution" | "points" | "positive-dimensional"
    points: list
    rejected: list  # (description strings) machine-readable reasons
    basis: Optional[GroebnerBasis] = None
    drl_basis: Optional[GroebnerBasis] = None
    equations: Optional[list] = None
    mixed_vars: tuple = ()


def _compressed_system(ap: AdvantagePolys, s: Support):
    equations, sign_conditions = face_system(ap, s)
    mixed_vars = tuple(i for i in range(ap.n) if s[i] == MIXED)
    compressed = [e.compress(mixed_vars) for e in equations]
    return compressed, sign_conditions, mixed_vars


def _separated_shape(equations, k: int):
    """Shape position via a trial separating form t = sum lambda^i x_i."""
    from .mpoly import buchberger

    for lam in (1, 2, 3, 5, 7, 11):
        ext = [e.expand(k + 1, list(range(k))) for e in equations]
        t_def = MPoly.variable(k, k + 1)
        for i in range(k):
            t_def = t_def - MPoly.variable(i, k + 1) * (mpq(lam) ** i)
        ext.append(t_def)
        gb = buchberger(ext, lex_order(k + 1))
        shape = shape_extract(gb)
        if shape is not None and shape.last_variable == k:
            return shape, gb
    return None, None


def solve_face(ap: AdvantagePolys, s: Support) -> FaceOutcome:
    """Solve one face system exactly.

    Buchberger (degrevlex) once per face; FGLM conversions supply lex
    bases.  Shape position yields exact back-substitutable points whose
    coordinates strictly inside (0,1) are kept; boundary points belong
    to other supports and are discarded.
    """
    compressed, _, mixed_vars = _compressed_system(ap, s)
    k = len(mixed_vars)
    if k == 0:
        raise ValueError("pure supports are handled by pure_ne")
    nonzero = [e for e in compressed if e]
    if not nonzero:
        # every equation vanishes identically: the whole open face solves
        return FaceOutcome(s, "positive-dimensional", [], [], None, None, compressed, mixed_vars)
    drl = buchberger_direct(nonzero, degrevlex_order(k))
    if drl.is_unit_ideal():
        return FaceOutcome(s, "no-solution", [], ["basis = {1}: empty variety"],
                           drl, drl, compressed, mixed_vars)
    if not is_zero_dimensional(drl):
        return FaceOutcome(s, "positive-dimensional", [], [], drl, drl, compressed, mixed_vars)
    lex_gb = None
    shape = None
    for last in range(k - 1, -1, -1):
        perm = [i for i in range(k) if i != last] + [last]
        cand = fglm(drl, lex_order(k, perm))
        shape = shape_extract(cand)
        if shape is not None:
            lex_gb = cand
            break
    if shape is not None:
        coord_polys = {mixed_vars[j]: shape.coordinate_poly(j) for j in range(k)}
        p = shape.univariate.primitive()
        root_lo, root_hi = mpq(0), mpq(1)
    else:
        # no coordinate separates the points (e.g. product games whose
        # factors repeat values); add a separating linear form t as the
        # last variable and extract shape there
        shape, lex_gb = _separated_shape(nonzero, k)
        if shape is None:
            raise PositiveDimensionalError(
                "zero-dimensional face not in shape position under any "
                "coordinate or trial separating form"
            )
        coord_polys = {mixed_vars[j]: shape.coordinate_poly(j) for j in range(k)}
        p = shape.univariate.primitive()
        root_lo, root_hi = NEG_INF, POS_INF
    points = []
    rejected = []
    for interval in isolate_roots(p, root_lo, root_hi):
        alpha = AlgebraicNumber(p, interval)
        # parameter must be strictly interior; its coordinate poly is y itself
        ok = True
        for var in mixed_vars:
            q = coord_polys[var]
            s_lo = alpha.sign_of(q)
            s_hi = alpha.sign_of(q - UPoly([1]))
            if s_lo <= 0 or s_hi >= 0:
                which = "0" if s_lo <= 0 else "1"
                rejected.append(
                    f"root in {interval.lo}..{interval.hi}: x_{var+1} hits boundary {which}"
                    if (s_lo == 0 or s_hi == 0)
                    else f"root in {interval.lo}..{interval.hi}: x_{var+1} outside (0,1)"
                )
                ok = False
                break
        if ok:
            points.append(FacePoint(s, mixed_vars, alpha, coord_polys))
    status = "points" if points else "no-solution"
    if not points and not rejected:
        rejected.append("no real roots of the eliminant inside (0,1)")
    return FaceOutcome(s, status, points, rejected, lex_gb, drl, compressed, mixed_vars)


def check_sign_conditions(ap: AdvantagePolys, s: Support, point: FacePoint,
                          face_basis=None) -> tuple[bool, str]:
    """Lemma 2.1 sign conditions for the pure players at a face point.

    Each f_i collapses, via the shape linear rules, to a univariate
    polynomial in the base algebraic coordinate; exact zero is decided
    by gcd against the defining polynomial and strict signs by interval
    refinement.  Zero satisfies both inequalities.
    """
    _, sign_conditions, _ = _compressed_system(ap, s)
    fixed = {i: (mpq(0) if s[i] == ZERO else mpq(1)) for i in range(ap.n) if s[i] != MIXED}
    values = []
    for j in range(ap.n):
        if j in point.coordinate_polys:
            values.append(point.coordinate_polys[j])
        else:
            values.append(UPoly([fixed[j]]))
    for player, req in sign_conditions:
        h = ap.polys[player - 1].eval_upoly(values)
        sgn = point.parameter.sign_of(h)
        if sgn == 0:
            continue
        if req == "-" and sgn > 0:
            return False, f"f_{player} > 0 but x_{player} = 0 requires f_{player} <= 0"
        if req == "+" and sgn < 0:
            return False, f"f_{player} < 0 but x_{player} = 1 requires f_{player} >= 0"
    return True, "all sign conditions hold"


def _box_bound(f: MPoly) -> tuple:
    """Crude enclosure of f over the unit box [0,1]^k."""
    lo = mpq(0)
    hi = mpq(0)
    for m, c in f.terms.items():
        if c > 0:
            hi += c
        else:
            lo += c
    return lo, hi


def _univariate_satisfiable(conds) -> bool:
    """Whether a conjunction of univariate sign conditions holds somewhere
    on the open interval (0,1).

    conds: list of (UPoly h, rel in {"<=", ">="}).  Exact cell
    decomposition: candidate witnesses are the roots of the product of
    the h's inside (0,1) plus one rational sample per root-free cell.
    """
    from .upoly import algebraic_roots, squarefree

    conds = [(h, rel) for h, rel in conds if h.degree >= 1]
    if not conds:
        return True  # all conditions were "0 rel 0"

    def holds_at_rational(r) -> bool:
        for h, rel in conds:
            v = h.eval(r)
            if (rel == "<=" and v > 0) or (rel == ">=" and v < 0):
                return False
        return True

    prod = UPoly([1])
    for h, _ in conds:
        prod = prod * squarefree(h)
    prod = squarefree(prod)
    roots = algebraic_roots(prod, mpq(0), mpq(1))  # half-open (0, 1]
    if not roots:
        return holds_at_rational(mpq(1, 2))
    # refine so every interval has lo > 0 and, unless the root is 1, hi < 1
    refined = []
    for a in roots:
        while a.interval.lo <= 0:
            a = a.refine_step()
        if a.defining.eval(mpq(1)) != 0:
            while a.interval.hi >= 1:
                a = a.refine_step()
        else:
            while a.interval.hi >= 1 and a.compare_rational(mpq(1)) != 0:
                a = a.refine_step()
        refined.append(a)
    # root witnesses (interior only)
    for a in refined:
        if a.compare_rational(mpq(1)) == 0:
            continue
        if all(
            (rel == "<=" and a.sign_of(h) <= 0) or (rel == ">=" and a.sign_of(h) >= 0)
            for h, rel in conds
        ):
            return True
    # cell witnesses: rational samples strictly between consecutive roots
    samples = [refined[0].interval.lo]
    for left, right in zip(refined, refined[1:]):
        samples.append((left.interval.hi + right.interval.lo) / 2)
    last = refined[-1]
    if last.interval.hi < 1:
        samples.append((last.interval.hi + 1) / 2)
    return any(holds_at_rational(r) for r in samples)


def resolve_positive_dimensional(ap: AdvantagePolys, s: Support,
                                 outcome: FaceOutcome) -> tuple[str, str]:
    """Try to exclude a positive-dimensional face.

    Three exact mechanisms, mirroring the paper's boundary case
    arguments: a sign-condition polynomial whose normal form modulo the
    face basis is a constant of the wrong sign rules out the whole
    variety; a unit-box enclosure of the normal form may do the same;
    and conditions whose normal forms share a single variable are
    tested jointly for satisfiability on (0,1).
    Returns ("excluded", reason) or ("unresolved", "").
    """
    mixed_vars = outcome.mixed_vars
    k = len(mixed_vars)
    basis = outcome.basis.generators if outcome.basis is not None else ()
    order = outcome.basis.order if outcome.basis is not None else degrevlex_order(k)
    fixed = {i: (mpq(0) if s[i] == ZERO else mpq(1)) for i in range(ap.n) if s[i] != MIXED}
    conditions = []  # (poly over mixed vars, relation, strict, label)
    for i in range(ap.n):
        if s[i] == MIXED:
            continue
        f = ap.polys[i].substitute(fixed).compress(mixed_vars)
        rel = "<=" if s[i] == ZERO else ">="
        conditions.append((f, rel, False, f"f_{i+1} {rel} 0"))
    for j, var in enumerate(mixed_vars):
        xj = MPoly.variable(j, k)
        conditions.append((xj, ">=", True, f"x_{var+1} > 0"))
        conditions.append((xj - MPoly.constant(1, k), "<=", True, f"x_{var+1} < 1"))
    groups: dict = {}  # single variable -> list of (UPoly, rel)
    group_labels: dict = {}
    for f, rel, strict, label in conditions:
        nf = normal_form(f, list(basis), order) if basis else f
        if nf.is_zero():
            c = mpq(0)
        elif nf.total_degree() == 0:
            c = nf.terms[(0,) * k]
        else:
            used = nf.variables_used()
            if len(used) == 1:
                v = used.pop()
                groups.setdefault(v, []).append((nf.to_upoly(v), rel))
                group_labels.setdefault(v, []).append(label)
            lo, hi = _box_bound(nf)
            if rel == "<=" and lo > 0:
                return "excluded", f"{label} violated: value >= {format_rational(lo)} on the face"
            if rel == ">=" and hi < 0:
                return "excluded", f"{label} violated: value <= {format_rational(hi)} on the face"
            continue
        if rel == "<=" and (c > 0 or (strict and c >= 0)):
            return "excluded", f"{label} violated: constant {format_rational(c)} on the variety"
        if rel == ">=" and (c < 0 or (strict and c <= 0)):
            return "excluded", f"{label} violated: constant {format_rational(c)} on the variety"
    for v, conds in groups.items():
        if len(conds) > 1 and not _univariate_satisfiable(conds):
            labels = ", ".join(group_labels[v])
            return "excluded", (
                f"conditions {labels} jointly unsatisfiable for x_{mixed_vars[v]+1} in (0,1)"
            )
    return "unresolved", ""


# --- equilibrium assembly ---


@dataclass
class MixedEquilibrium:
    support: Support
    profile: tuple  # Coordinate per player (mpq for pure, AlgebraicNumber mixed)
    defining: tuple  # per-player UPoly (integer-cleared eliminant; linear for pure)
    parameter: AlgebraicNumber
    coordinate_polys: dict  # 0-based var -> UPoly in the parameter
    certificates: dict = field(default_factory=dict)


@dataclass
class EquilibriumReport:
    game: Game
    pure_nes: list
    deviation_table: DeviationTable
    mixed_nes: list  # MixedEquilibrium
    positive_dimensional_faces: list  # (Support, GroebnerBasis | None) unresolved
    excluded_faces: list  # (Support, reason)
    uniqueness: object  # True | False | "unresolved"

    @property
    def total_nes(self) -> int:
        return len(self.pure_nes) + len(self.mixed_nes)

    def unique_equilibrium(self):
        if self.total_nes != 1:
            raise ValueError("report does not contain exactly one equilibrium")
        if self.mixed_nes:
            return self.mixed_nes[0].profile
        return tuple(mpq(1 - a) for a in self.pure_nes[0])


def _coordinate_number(eliminant: UPoly, q: UPoly, alpha: AlgebraicNumber,
                       cert=None) -> AlgebraicNumber:
    """Exact coordinate value q(alpha) as a root of its own eliminant."""
    value_is = q
    a = alpha
    while True:
        lo, hi = interval_eval(value_is, a.interval.lo, a.interval.hi)
        pad = (hi - lo) if hi > lo else mpq(1, 1024)
        cand = IsolatingInterval(lo - pad, hi)
        if count_real_roots(eliminant, cand.lo, cand.hi) == 1:
            return AlgebraicNumber(eliminant, cand, cert)
        a = a.refine_step()


def _per_variable_eliminants(drl: GroebnerBasis, mixed_vars, k: int) -> dict:
    out = {}
    for j in range(k):
        perm = [i for i in range(k) if i != j] + [j]
        gb = fglm(drl, lex_order(k, perm))
        uni = next(g for g in gb.generators if g.variables_used() <= {j})
        out[mixed_vars[j]] = uni.to_upoly(j).primitive()
    return out


def solve_all_ne(g: Game, max_players: int = 12) -> EquilibriumReport:
    """Enumerate all 3^n supports and aggregate exact equilibria."""
    if g.n > max_players:
        raise ValueError(f"support enumeration beyond {max_players} players refused")
    ap = advantage_polys(g)
    pures, table = pure_ne(g)
    mixed = []
    unresolved = []
    excluded = []
    for s in sorted(itertools.product((ZERO, ONE, MIXED), repeat=g.n)):
        if MIXED not in s:
            continue
        outcome = solve_face(ap, s)
        if outcome.status == "no-solution":
            excluded.append((s, "; ".join(outcome.rejected)))
            continue
        if outcome.status == "positive-dimensional":
            verdict, reason = resolve_positive_dimensional(ap, s, outcome)
            if verdict == "excluded":
                excluded.append((s, reason))
            else:
                unresolved.append((s, outcome.basis))
            continue
        eliminants = _per_variable_eliminants(outcome.drl_basis, outcome.mixed_vars,
                                              len(outcome.mixed_vars))
        for point in outcome.points:
            ok, reason = check_sign_conditions(ap, s, point)
            if not ok:
                excluded.append((s, reason))
                continue
            coords = []
            defining = []
            for j in range(g.n):
                if s[j] == MIXED:
                    elim = eliminants[j]
                    coords.append(_coordinate_number(elim, point.coordinate_polys[j],
                                                     point.parameter))
                    defining.append(elim)
                else:
                    v = mpq(0) if s[j] == ZERO else mpq(1)
                    coords.append(v)
                    defining.append(UPoly([-v, 1]).primitive())  # y - v
            point.coords = tuple(coords)
            mixed.append(MixedEquilibrium(s, tuple(coords), tuple(defining),
                                          point.parameter, point.coordinate_polys))
    total = len(pures) + len(mixed)
    if unresolved:
        uniqueness = "unresolved"
    else:
        uniqueness = total == 1
    return EquilibriumReport(g, pures, table, mixed, unresolved, excluded, uniqueness)


def minimal_polys_per_variable(g: Game) -> list:
    """Univariate eliminants of the fully mixed face, one per variable,
    integer-cleared.  Errors if that face is positive-dimensional."""
    ap = advantage_polys(g)
    compressed, _, mixed_vars = _compressed_system(ap, (MIXED,) * g.n)
    nonzero = [e for e in compressed if e]
    if not nonzero:
        raise PositiveDimensionalError("fully mixed face has no equations")
    drl = buchberger_direct(nonzero, degrevlex_order(g.n))
    if drl.is_unit_ideal():
        raise ValueError("fully mixed face is empty")
    if not is_zero_dimensional(drl):
        raise PositiveDimensionalError("fully mixed face is positive-dimensional")
    table = _per_variable_eliminants(drl, mixed_vars, g.n)
    return [table[i] for i in range(g.n)]


def approx_profile(report: EquilibriumReport, digits: int) -> list:
    """Certified fixed-point decimals (round half to even) for the
    coordinates of the report's unique equilibrium."""
    profile = report.unique_equilibrium()
    out = []
    for v in profile:
        if isinstance(v, AlgebraicNumber):
            out.append(v.decimal(digits))
        else:
            out.append(decimal_of_rational(v, digits))
    return out


# --- verification ---


def _algebraic_equal(a: AlgebraicNumber, b: AlgebraicNumber) -> bool:
    from .upoly import poly_gcd

    g = poly_gcd(a.defining, b.defining)
    if g.degree() < 1:
        return False
    if a.sign_of(g) != 0 or b.sign_of(g) != 0:
        return False
    while True:
        if a.interval.hi <= b.interval.lo or b.interval.hi <= a.interval.lo:
            return False
        lo = min(a.interval.lo, b.interval.lo)
        hi = max(a.interval.hi, b.interval.hi)
        if count_real_roots(g, lo, hi) == 1:
            return True
        a = a.refine_step()
        b = b.refine_step()


def _coords_equal(u, v) -> bool:
    ur = not isinstance(u, AlgebraicNumber)
    vr = not isinstance(v, AlgebraicNumber)
    if ur and vr:
        return mpq(u) == mpq(v)
    if ur:
        return v.compare_rational(mpq(u)) == 0
    if vr:
        return u.compare_rational(mpq(v)) == 0
    return _algebraic_equal(u, v)


def verify_ne(g: Game, x: Sequence, refine_budget: int = 256,
              _report: Optional[EquilibriumReport] = None):
    """Check Lemma 2.1 at a profile; returns (verdict, explanation).

    verdict is True, False, or "undetermined".  All-rational profiles
    are decided by exact evaluation.  Profiles with algebraic entries
    are first screened by interval arithmetic; surviving exact-zero
    obligations are settled by matching the profile against the game's
    own enumerated equilibria (coordinate-wise algebraic equality).
    """
    if len(x) != g.n:
        raise ValueError("profile length mismatch")
    entries = [v if isinstance(v, AlgebraicNumber) else rational(v) for v in x]
    ap = advantage_polys(g)
    if all(not isinstance(v, AlgebraicNumber) for v in entries):
        for i in range(g.n):
            fi = ap.polys[i].eval(entries)
            xi = entries[i]
            if not 0 <= xi <= 1:
                return False, f"x_{i+1} outside [0,1]"
            if xi == 0 and fi > 0:
                return False, f"player {i+1}: f_{i+1} = {format_rational(fi)} > 0 with x_{i+1} = 0"
            if xi == 1 and fi < 0:
                return False, f"player {i+1}: f_{i+1} = {format_rational(fi)} < 0 with x_{i+1} = 1"
            if 0 < xi < 1 and fi != 0:
                return False, f"player {i+1}: f_{i+1} = {format_rational(fi)} != 0 at mixed x_{i+1}"
        return True, "all Lemma 2.1 conditions hold exactly"

    # interval screening
    def bounds(v):
        if isinstance(v, AlgebraicNumber):
            return v.interval.lo, v.interval.hi
        return mpq(v), mpq(v)

    for _ in range(refine_budget):
        pending = False
        for i in range(g.n):
            lo = hi = None
            acc_lo, acc_hi = mpq(0), mpq(0)
            for m, c in ap.polys[i].terms.items():
                t_lo, t_hi = mpq(c), mpq(c)
                for j, e in enumerate(m):
                    for _e in range(e):
                        b_lo, b_hi = bounds(entries[j])
                        cands = (t_lo * b_lo, t_lo * b_hi, t_hi * b_lo, t_hi * b_hi)
                        t_lo, t_hi = min(cands), max(cands)
                acc_lo += t_lo
                acc_hi += t_hi
            xi = entries[i]
            x_lo, x_hi = bounds(xi)
            if x_hi <= 0 or (not isinstance(xi, AlgebraicNumber) and xi == 0):
                if acc_lo > 0:
                    return False, f"player {i+1}: f_{i+1} > 0 with x_{i+1} = 0"
            elif x_lo >= 1 or (not isinstance(xi, AlgebraicNumber) and xi == 1):
                if acc_hi < 0:
                    return False, f"player {i+1}: f_{i+1} < 0 with x_{i+1} = 1"
            else:
                if acc_lo > 0 or acc_hi < 0:
                    return False, f"player {i+1}: f_{i+1} nonzero at mixed x_{i+1}"
                pending = True
        if not pending:
            return True, "interval certificates decided every condition"
        entries = [v.refine_step() if isinstance(v, AlgebraicNumber) else v
                   for v in entries]

    # exact-zero obligations: match against the enumerated equilibria
    report = _report if _report is not None else solve_all_ne(g)
    for eq in report.mixed_nes:
        if all(_coords_equal(u, v) for u, v in zip(entries, eq.profile)):
            return True, "profile matches an enumerated equilibrium exactly"
    for p in report.pure_nes:
        target = tuple(mpq(1 - a) for a in p)
        if all(_coords_equal(u, v) for u, v in zip(entries, target)):
            return True, "profile matches a pure equilibrium exactly"
    return "undetermined", "interval budget exhausted and no exact equilibrium match"


# --- game file format ---


def format_game(g: Game) -> str:
    lines = [f"players: {g.n}"]
    for profile in _profiles(g.n):
        left = " ".join(str(a) for a in profile)
        right = " ".join(format_rational(v) for v in g.row(profile))
        lines.append(f"{left} | {right}")
    return "\n".join(lines) + "\n"


def parse_game(text: str, name: str = "") -> Game:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    head = lines[0]
    if not head.startswith("players:"):
        raise ValueError('game file must start with "players: n"')
    n = int(head.split(":", 1)[1])
    table = {}
    for ln in lines[1:]:
        left, _, right = ln.partition("|")
        profile = tuple(int(t) for t in left.split())
        payoffs = tuple(rational(t) for t in right.split())
        table[profile] = payoffs
    return Game.from_table(n, table, name)


def game_to_json(g: Game) -> str:
    payload = {
        "players": g.n,
        "payoffs": {
            "".join(str(a) for a in profile): [format_rational(v) for v in g.row(profile)]
            for profile in _profiles(g.n)
        },
    }
    if g.name:
        payload["name"] = g.name
    return json.dumps(payload, indent=2)


def game_from_json(text: str) -> Game:
    payload = json.loads(text)
    n = payload["players"]
    table = {
        tuple(int(ch) for ch in key): tuple(rational(v) for v in row)
        for key, row in payload["payoffs"].items()
    }
    return Game.from_table(n, table, payload.get("name", ""))
