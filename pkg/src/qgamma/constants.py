"""Shared high-precision constants (mpmath backend, 40 significant digits)."""

from __future__ import annotations

import mpmath
from mpmath import mp, mpc, mpf

mp.dps = 40

EULER = +mp.euler
PI = +mp.pi
TWO_PI = 2 * mp.pi
TWO_PI_I = mpc(0, 2) * mp.pi
PI_I = mpc(0, 1) * mp.pi
I = mpc(0, 1)

_ZETA_CACHE: dict = {}


def zeta_int(k: int) -> mpf:
    if k not in _ZETA_CACHE:
        _ZETA_CACHE[k] = +mpmath.zeta(k)
    return _ZETA_CACHE[k]


def log_gamma_coeffs(order: int) -> list:
    """Taylor coefficients of log Gamma(1+x) up to x^order (index = power)."""
    coeffs = [mpf(0), -EULER]
    for k in range(2, order + 1):
        coeffs.append((-1) ** k * zeta_int(k) / k)
    return coeffs
