"""Shared fixtures.  The expensive G5 artifacts are computed once per
session (solve_named is also process-cached), so the full suite pays
for the degree-26 Groebner work a single time."""

import functools

import pytest

from irradical.construct import make_named, solve_named
from irradical.games import minimal_polys_per_variable, restrict
from irradical.galois import sn_certificate


@pytest.fixture(scope="session")
def g3_report():
    return solve_named("G3")


@pytest.fixture(scope="session")
def g4_report():
    return solve_named("G4")


@pytest.fixture(scope="session")
def g5_report():
    return solve_named("G5")


@pytest.fixture(scope="session")
def g4_minpolys():
    return minimal_polys_per_variable(make_named("G4"))


@pytest.fixture(scope="session")
def g5_minpolys():
    return minimal_polys_per_variable(make_named("G5"))


@pytest.fixture(scope="session")
def g5_restricted_reports():
    from irradical.games import solve_all_ne

    g5 = make_named("G5")
    return {v: solve_all_ne(restrict(g5, 1, v)) for v in (0, 1)}


@functools.lru_cache(maxsize=None)
def _sn_cached(coeffs, prime_bound):
    from irradical.upoly import UPoly

    return sn_certificate(UPoly(list(coeffs)), prime_bound)


@pytest.fixture(scope="session")
def sn_cert_for():
    """S_n certificate keyed by the polynomial's coefficients, cached so
    the degree-26 scans run once per distinct minimal polynomial."""

    def get(f, prime_bound=100_000):
        return _sn_cached(tuple(f.primitive().coeffs), prime_bound)

    return get
