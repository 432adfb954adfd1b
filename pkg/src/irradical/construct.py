"""Concrete games and the composition operators generating G_n for all n.

The named tables are exact transcriptions of the published figures; the
product and ∘H3 operators implement the two composition lemmas, and
make_gn selects factors by n mod 4.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Optional

from gmpy2 import mpq

from .games import (
    EquilibriumReport,
    Game,
    solve_all_ne,
)
from .upoly import AlgebraicNumber, UPoly

# Each table row: "a_1...a_n" -> payoff digit string "u_1...u_n".
_G3_ROWS = {
    "000": "002", "001": "100", "010": "010", "011": "001",
    "100": "000", "101": "011", "110": "110", "111": "101",
}

_G4_ROWS = {
    "0000": "0001", "0001": "1000", "0010": "0010", "0011": "0100",
    "0100": "0002", "0101": "1100", "0110": "1010", "0111": "1001",
    "1000": "0000", "1001": "0111", "1010": "1011", "1011": "1101",
    "1100": "1100", "1101": "0011", "1110": "0110", "1111": "0101",
}

_G5_ROWS = {
    "00000": "10001", "00001": "11000", "00010": "10010", "00011": "00100",
    "00100": "10002", "00101": "01100", "00110": "11010", "00111": "01001",
    "01000": "10000", "01001": "00111", "01010": "11011", "01011": "01101",
    "01100": "11100", "01101": "10101", "01110": "10211", "01111": "00101",
    "10000": "00001", "10001": "01010", "10010": "00010", "10011": "10100",
    "10100": "00002", "10101": "11100", "10110": "11010", "10111": "01001",
    "11000": "00000", "11001": "10111", "11010": "01011", "11011": "11101",
    "11100": "01100", "11101": "10011", "11110": "00110", "11111": "10101",
}

_H3_ROWS = {
    "000": "011", "001": "011", "010": "010", "011": "001",
    "100": "001", "101": "000", "110": "010", "111": "000",
}

_TABLES = {"G3": _G3_ROWS, "G4": _G4_ROWS, "G5": _G5_ROWS, "H3": _H3_ROWS}


def make_named(name: str) -> Game:
    """G3, G4, G5 or H3 with the exact published payoff tensors."""
    if name not in _TABLES:
        raise ValueError(f"unknown game {name!r}; expected one of {sorted(_TABLES)}")
    rows = _TABLES[name]
    n = len(next(iter(rows)))
    table = {
        tuple(int(c) for c in profile): tuple(mpq(int(c)) for c in payoffs)
        for profile, payoffs in rows.items()
    }
    return Game.from_table(n, table, name)


def product(g1: Game, g2: Game) -> Game:
    """Player-disjoint juxtaposition; payoffs depend only on the own factor."""
    n = g1.n + g2.n
    rows = []
    for profile in itertools.product((0, 1), repeat=n):
        a1, a2 = profile[: g1.n], profile[g1.n :]
        rows.append(g1.row(a1) + g2.row(a2))
    name = f"{g1.name}x{g2.name}" if g1.name and g2.name else ""
    return Game(n, tuple(rows), name)


def circ_h3(g: Game) -> Game:
    """Append two players coupled to player n through the H3 gadget.

    Players 1..n keep their payoffs (ignoring the new coordinates);
    players n+1 and n+2 receive H3's player-2 and player-3 payoffs
    evaluated at (a_n, a_{n+1}, a_{n+2}).
    """
    h3 = make_named("H3")
    n = g.n + 2
    rows = []
    for profile in itertools.product((0, 1), repeat=n):
        base = profile[: g.n]
        tail = (profile[g.n - 1], profile[g.n], profile[g.n + 1])
        h_row = h3.row(tail)
        rows.append(g.row(base) + (h_row[1], h_row[2]))
    return Game(n, tuple(rows), f"{g.name}∘H3" if g.name else "")


@dataclass(frozen=True)
class GnRecipe:
    """Factorization n = 4q + r behind G_n (§-style four-case recipe)."""

    n: int
    q: int
    r: int
    factors: tuple  # labels from {"G3","G4","G5","H3","G4∘H3","G5∘H3"}

    def factor_sizes(self) -> tuple:
        return tuple(_FACTOR_SIZES[f] for f in self.factors)


_FACTOR_SIZES = {"G3": 3, "G4": 4, "G5": 5, "H3": 3, "G4∘H3": 6, "G5∘H3": 7}


def _factor_game(label: str) -> Game:
    if label in ("G3", "G4", "G5", "H3"):
        return make_named(label)
    base = make_named(label.split("∘")[0])
    return circ_h3(base)


def make_gn(n: int) -> tuple[Game, GnRecipe]:
    """The n-player game with a unique (irradical for n >= 4) NE."""
    if n < 3:
        raise ValueError("make_gn needs n >= 3")
    if n in (3, 4, 5):
        label = f"G{n}"
        recipe = GnRecipe(n, *divmod(n, 4), (label,))
        return make_named(label), recipe
    q, r = divmod(n, 4)
    if r == 0:
        factors = ("G4",) * q
    elif r == 1:
        factors = ("G4",) * (q - 1) + ("G5",)
    elif r == 2:
        factors = ("G4",) * (q - 1) + ("G4∘H3",)
    else:
        factors = ("G4",) * (q - 1) + ("G5∘H3",)
    game = _factor_game(factors[0])
    for label in factors[1:]:
        game = product(game, _factor_game(label))
    game = Game(game.n, game.payoffs, f"G{n}")
    return game, GnRecipe(n, q, r, factors)


@functools.lru_cache(maxsize=None)
def solve_named(name: str) -> EquilibriumReport:
    """Cached full enumeration for the small named games."""
    return solve_all_ne(make_named(name))


@dataclass
class ComposedCoordinate:
    """One coordinate of a composed equilibrium with its provenance."""

    player: int  # 1-based in the composed game
    value: object  # mpq | AlgebraicNumber
    defining: UPoly
    factor: str
    mirrored_from: Optional[int] = None  # 1-based player it copies (H3 tail)


@dataclass
class ComposedReport:
    """Equilibrium of a composed game assembled factor-by-factor.

    For products the NE set is the cross product of the factors' sets;
    for G∘H3 the two appended players mirror player n's mixture.  The
    verdict is lemma-based (flagged) rather than a 3^n enumeration,
    which is run separately only for small n.
    """

    game: Game
    recipe: GnRecipe
    factor_reports: list  # (label, player offset, EquilibriumReport of the core)
    coordinates: list  # ComposedCoordinate per player
    lemma_based: bool
    uniqueness: object


def _core_label(label: str) -> str:
    return label.split("∘")[0]


def composed_report(n: int) -> ComposedReport:
    game, recipe = make_gn(n)
    offset = 0
    factor_reports = []
    coords: list[ComposedCoordinate] = []
    unique = True
    for label in recipe.factors:
        core = _core_label(label)
        report = solve_named(core)
        factor_reports.append((label, offset, report))
        if report.uniqueness is not True:
            unique = report.uniqueness
        eq = report.mixed_nes[0]
        core_n = report.game.n
        for j in range(core_n):
            coords.append(
                ComposedCoordinate(offset + j + 1, eq.profile[j], eq.defining[j], label)
            )
        if label.endswith("∘H3"):
            anchor = coords[-1]
            for extra in range(2):
                coords.append(
                    ComposedCoordinate(
                        offset + core_n + extra + 1,
                        anchor.value,
                        anchor.defining,
                        label,
                        mirrored_from=anchor.player,
                    )
                )
        offset += _FACTOR_SIZES[label]
    lemma_based = len(recipe.factors) > 1 or recipe.factors[0].endswith("∘H3")
    return ComposedReport(game, recipe, factor_reports, coords, lemma_based, unique)
