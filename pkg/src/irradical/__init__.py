"""Exact algebraic workbench for games with irradical equilibria.

Construct the concrete games, prove uniqueness of their fully mixed
Nash equilibria by exhaustive support enumeration over exact rationals,
attach algebraic certificates (minimal polynomials, isolating
intervals, irreducibility and symmetric-Galois-group witnesses), and
sample equilibrium play exactly.
"""

from .rat import QQ, is_prime, rational
from .upoly import (
    AlgebraicNumber,
    IsolatingInterval,
    UPoly,
    count_real_roots,
    isolate_roots,
    murty_certificate,
    radical_form_deg2,
    sturm_chain,
)
from .mpoly import MPoly, buchberger, eliminate_to_univariate, lex_order
from .galois import degree_pattern, irradicality_verdict, reduce_mod_p, sn_certificate
from .games import (
    Game,
    advantage_polys,
    approx_profile,
    expected_payoffs,
    minimal_polys_per_variable,
    pure_ne,
    restrict,
    solve_all_ne,
    verify_ne,
)
from .construct import circ_h3, composed_report, make_gn, make_named, product
from .sampler import BitSource, bernoulli, sample_profile

__all__ = [
    "QQ", "is_prime", "rational",
    "AlgebraicNumber", "IsolatingInterval", "UPoly", "count_real_roots",
    "isolate_roots", "murty_certificate", "radical_form_deg2", "sturm_chain",
    "MPoly", "buchberger", "eliminate_to_univariate", "lex_order",
    "degree_pattern", "irradicality_verdict", "reduce_mod_p", "sn_certificate",
    "Game", "advantage_polys", "approx_profile", "expected_payoffs",
    "minimal_polys_per_variable", "pure_ne", "restrict", "solve_all_ne", "verify_ne",
    "circ_h3", "composed_report", "make_gn", "make_named", "product",
    "BitSource", "bernoulli", "sample_profile",
]

__version__ = "0.1.0"
