"""Characteristic classes: Chern characters, Todd and Gamma classes, the
Euler pairing, and zeta-regularized products."""

import math

import mpmath
import pytest
from mpmath import mp, mpf, mpc

from qgamma.constants import EULER, TWO_PI, zeta_int
from qgamma.rings import build_ring, cup, poincare_pair
from qgamma.charclasses import (trivial_bundle, line_on_P, tangent_bundle,
                                kapranov_schur, ch_classical, ch_modified,
                                todd_classical, gamma_class,
                                gamma_G_closed_form, kapranov_ch,
                                bracket_pairing, euler_pairing_hrr,
                                hurwitz_zeta_em, zeta_reg_reciprocal_product,
                                zeta_reg_closed_form)

P1 = build_ring("P", 2)
P2 = build_ring("P", 3)
G24 = build_ring("G", 4, 2)


def test_ch_line_bundle():
    c = ch_classical(line_on_P(P2, 1))
    assert abs(c.coeffs[0] - 1) < 1e-30
    assert abs(c.coeffs[1] - 1) < 1e-30
    assert abs(c.coeffs[2] - mpf(1) / 2) < 1e-30


def test_ch_rank_and_dual():
    V = kapranov_schur(G24, (2, 1))
    assert V.rank == 2
    c = ch_classical(V)
    cd = ch_classical(V.dual())
    assert abs(c.coeffs[0] - 2) < 1e-30
    assert abs(c.coeffs[1] + cd.coeffs[1]) < 1e-30


def test_todd_p1():
    td = todd_classical(tangent_bundle(P1))
    assert abs(td.coeffs[0] - 1) < 1e-30
    assert abs(td.coeffs[1] - 1) < 1e-30


def test_gamma_p1():
    g = gamma_class(P1)
    assert abs(g.coeffs[0] - 1) < 1e-30
    assert abs(g.coeffs[1] + 2 * EULER) < 1e-30


def test_gamma_p2():
    g = gamma_class(P2)
    assert abs(g.coeffs[1] + 3 * EULER) < 1e-30
    expect = mpf(9) / 2 * EULER ** 2 + mpf(3) / 2 * zeta_int(2)
    assert abs(g.coeffs[2] - expect) < 1e-30


def test_gamma_g_closed_form_matches_generic():
    for (r, N) in [(2, 4), (2, 5)]:
        ring = build_ring("G", N, r)
        a = gamma_class(ring)
        b = gamma_G_closed_form(r, N)
        assert max(abs(mpc(x) - mpc(y)) for x, y in zip(a.coeffs, b.coeffs)) < 1e-30


def test_euler_pairing_p1():
    O = trivial_bundle(P1)
    O1 = line_on_P(P1, 1)
    assert euler_pairing_hrr(O, O1)[1] == 2
    assert euler_pairing_hrr(O1, O)[1] == 0
    assert euler_pairing_hrr(O, O)[1] == 1


def test_euler_pairing_p3_binomial():
    P3 = build_ring("P", 4)
    for i in range(4):
        for j in range(4):
            chi = euler_pairing_hrr(line_on_P(P3, i), line_on_P(P3, j))[1]
            assert chi == (math.comb(3 + j - i, 3) if j >= i else 0)


def test_bracket_reproduces_euler_pairing():
    gam = gamma_class(P1)
    O = cup(gam, ch_modified(trivial_bundle(P1)))
    O1 = cup(gam, ch_modified(line_on_P(P1, 1)))
    assert abs(bracket_pairing(O, O) - 1) < 1e-12
    assert abs(bracket_pairing(O, O1) - 2) < 1e-12
    assert abs(bracket_pairing(O1, O)) < 1e-12


def test_kapranov_euler_pairing_not_orthogonal():
    # chi(S^(1) V*, S^(21) V*) on G(2,4) is 16, not 0: the two marking-0
    # members of the Kapranov collection pair nontrivially in one direction.
    chi = euler_pairing_hrr(kapranov_schur(G24, (1,)), kapranov_schur(G24, (2, 1)))[1]
    assert chi == 16
    chi = euler_pairing_hrr(kapranov_schur(G24, (2, 1)), kapranov_schur(G24, (1,)))[1]
    assert chi == 0


def test_hurwitz_zeta_against_mpmath():
    for s in [mpf("-0.5"), mpf("0.7"), mpf(2), mpf("3.3")]:
        for a in [mpf("0.5"), mpf(1), mpf("2.25")]:
            ours = hurwitz_zeta_em(s, a)
            ref = mpmath.zeta(s, a)
            assert abs(ours - ref) < 1e-25 * (1 + abs(ref))


def test_zeta_reg_grid():
    worst = 0.0
    for delta in [mpf("0.5"), mpf(1), mpf("1.5"), mpf(2)]:
        for z in [mpf("0.5"), mpf(1), mpf(2)]:
            num = zeta_reg_reciprocal_product(delta, z)
            cf = zeta_reg_closed_form(delta, z)
            worst = max(worst, float(abs(num - cf) / abs(cf)))
    assert worst < 1e-8


def test_zeta_reg_value():
    # delta = z = 1: product over Gamma(1+1/z)-type towers collapses to
    # 1/sqrt(2 pi)
    cf = zeta_reg_closed_form(mpf(1), mpf(1))
    assert abs(cf - 1 / mpmath.sqrt(TWO_PI) * mpmath.gamma(2)) < 1e-30
