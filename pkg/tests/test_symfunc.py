"""Truncated polynomial kernel and Schur expansion."""

from fractions import Fraction

from qgamma.symfunc import (poly_var, poly_mul, poly_add, poly_linear,
                            poly_exp, poly_inv, schur_poly, schur_expand,
                            ssyt_monomials, vandermonde, perm_sign)


def test_perm_sign():
    assert perm_sign((0, 1, 2)) == 1
    assert perm_sign((1, 0, 2)) == -1
    assert perm_sign((2, 0, 1)) == 1


def test_ssyt_count():
    # s_{(2,1)} in 3 variables has 8 monomials with multiplicity
    assert len(ssyt_monomials((2, 1), 3)) == 8
    assert len(ssyt_monomials((1, 1), 2)) == 1


def test_schur_poly_expand_roundtrip():
    for r, cols in [(2, 2), (2, 3), (3, 3)]:
        from qgamma.rings import partitions_in_box
        for lam in partitions_in_box(r, cols):
            p = schur_poly(lam, r)
            out = schur_expand(p, r, cols, sum(lam) + 1)
            assert out == {lam: 1}


def test_schur_expand_littlewood_richardson():
    p = poly_mul(schur_poly((1,), 2), schur_poly((1,), 2), 10)
    out = schur_expand(p, 2, 3, 10)
    assert out == {(2,): 1, (1, 1): 1}


def test_poly_exp_inv():
    x = poly_var(2, 0, 5)
    e = poly_exp({k: Fraction(v) for k, v in x.items()}, 2, 5)
    inv = poly_inv(e, 2, 5)
    prod = poly_mul(e, inv, 5)
    assert prod.get((0, 0)) == 1
    assert all(v == 0 for k, v in prod.items() if k != (0, 0))
