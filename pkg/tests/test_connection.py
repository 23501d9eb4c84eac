"""Quantum connection: c1 spectra and Property O, the canonical fundamental
solution and its exact identities, J-function oracles, central charges."""

import math
from fractions import Fraction

import numpy as np
import pytest
from mpmath import mpf, pi as mp_pi, exp as mp_exp, mpc

from qgamma.rings import build_ring
from qgamma.charclasses import trivial_bundle, gamma_class, ch_modified, line_on_P
from qgamma.connection import (c1_matrix, spectrum, spectrum_closed_form,
                               fundamental_solution, recursion_residual,
                               pairing_identity_residual, degree_shift_ok,
                               j_coefficients, j_scaled, j_closed_form_P,
                               quantum_period, central_charge)

P1 = build_ring("P", 2)
P2 = build_ring("P", 3)
G24 = build_ring("G", 4, 2)
G25 = build_ring("G", 5, 2)


def test_c1_matrix_p1():
    m = c1_matrix(P1)
    assert np.allclose(m, [[0, 2], [2, 0]])


def test_spectrum_projective():
    for N in range(2, 7):
        rep = spectrum(build_ring("P", N))
        assert rep.property_o_holds and rep.closed_form_match
        assert abs(rep.T - N) < 1e-8


def test_spectrum_g24():
    rep = spectrum(G24)
    assert abs(rep.T - 4 * math.sqrt(2)) < 1e-8
    assert rep.property_o_holds and rep.closed_form_match
    zero = [m for v, m in rep.eigenvalues if abs(v) < 1e-8]
    assert zero == [2]


def test_spectrum_g25():
    rep = spectrum(G25)
    assert abs(rep.T - 5 * math.sin(2 * math.pi / 5) / math.sin(math.pi / 5)) < 1e-8
    assert rep.T_multiplicity == 1
    assert abs(rep.T_prime - 2.5) < 1e-8
    assert rep.property_o_holds


def test_spectrum_closed_form_count():
    assert len(spectrum_closed_form(2, 5)) == 10
    assert len(spectrum_closed_form(3, 6)) == 20


def test_fundamental_solution_p1():
    fs = fundamental_solution(P1, 6)
    assert fs.T[2][0][0] == Fraction(-1) and fs.T[2][0][1] == Fraction(-1)
    assert fs.T[2][1][0] == Fraction(2) and fs.T[2][1][1] == Fraction(1)
    assert recursion_residual(fs) == 0


def test_fundamental_solution_identities():
    for ring in [P1, P2, G24]:
        fs = fundamental_solution(ring, ring.dim + 6)
        assert recursion_residual(fs) == 0
        assert pairing_identity_residual(fs) == 0
        assert degree_shift_ok(fs)


def test_j_oracle_projective():
    for N in range(2, 6):
        ring = build_ring("P", N)
        rec = j_coefficients(ring, 3 * N)
        closed = j_closed_form_P(N, 3 * N)
        for a, b in zip(rec, closed):
            assert a.coeffs == b.coeffs


def test_j_scaled_matches_exact():
    for ring in [P2, G24]:
        exact = j_coefficients(ring, 12)
        rows = j_scaled(ring, 12)
        fact = 1
        for n in range(13):
            fact *= max(n, 1)
            for j in range(ring.rank):
                want = float(exact[n].coeffs[j]) * fact
                assert abs(rows[n][j] - want) <= 1e-12 * (1 + abs(want))


def test_j_support_divisibility():
    for ring, rf in [(P2, 3), (G25, 5)]:
        for n, row in enumerate(j_coefficients(ring, 2 * rf)):
            if n % rf:
                assert all(c == 0 for c in row.coeffs)


def test_quantum_period_g24():
    gs = quantum_period(G24, 8)
    assert gs[0] == 1 and gs[4] == 2 and gs[8] == Fraction(3, 8)
    assert all(gs[n] == 0 for n in range(9) if n % 4)


def test_central_charge_p1():
    # Z(O) on P^1 at t: (2 pi i) [J(e^{i pi} t), Gamma-hat)
    z1 = central_charge(trivial_bundle(P1), mpf(2), 150)
    z2 = central_charge(trivial_bundle(P1), mpf(2), 200)
    assert abs(z1 - z2) < 1e-20 * (1 + abs(z1))
