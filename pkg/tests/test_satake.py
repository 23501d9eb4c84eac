"""End-to-end Satake verification layer."""

import numpy as np
import pytest

from qgamma.rings import build_ring
from qgamma.wedgecheck import (check_wedge_spectrum,
                               check_kapranov_wedge_identity,
                               check_mrs_wedge)


@pytest.mark.parametrize("r,N", [(2, 4), (2, 5), (3, 6)])
def test_wedge_spectrum(r, N):
    rep = check_wedge_spectrum(r, N)
    assert rep.passed
    assert rep.max_residual < 1e-8


def test_wedge_spectrum_trivial_r1():
    rep = check_wedge_spectrum(1, 4)
    assert rep.passed


@pytest.mark.parametrize("r,N", [(2, 4), (2, 5)])
def test_kapranov_identity_full_box(r, N):
    for nu in build_ring("G", N, r).basis:
        rep = check_kapranov_wedge_identity(r, N, nu)
        assert rep.passed, f"nu={nu}: residual {rep.max_residual}"
        assert rep.max_residual < 1e-10


def test_kapranov_identity_sample_g36():
    for nu in [(), (2, 1), (3, 3, 3)]:
        rep = check_kapranov_wedge_identity(3, 6, nu)
        assert rep.passed and rep.max_residual < 1e-10


def test_kapranov_identity_trivial_r1():
    rep = check_kapranov_wedge_identity(1, 3, (2,))
    assert rep.passed and rep.max_residual < 1e-25


def test_mrs_wedge_g24():
    rep = check_mrs_wedge(2, 4, -0.05)
    assert rep.passed
    assert np.array_equal(rep.lhs, rep.rhs)
    assert rep.details["marking_residual"] < 1e-8


def test_mrs_wedge_g25():
    rep = check_mrs_wedge(2, 5, -0.03)
    assert rep.passed


def test_mrs_wedge_rejects_inadmissible_phase():
    with pytest.raises(ValueError):
        check_mrs_wedge(2, 4, 0.0)
