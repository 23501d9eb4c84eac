"""Limit-taking machinery: the Gamma Conjecture I limit ratio, Apery ratios,
quantum-period radius estimation, and the Mellin-Barnes solution Psi(t) with
its three evaluation routes and asymptotic constant."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import scipy.special
from mpmath import mp, mpc, mpf, exp as mp_exp, log as mp_log

from .constants import TWO_PI, log_gamma_coeffs
from .rings import RingSpec, CohClass, build_ring, cup, poincare_pair
from .charclasses import gamma_class
from .connection import j_scaled


@dataclass
class LimitReport:
    grid: list
    values: list
    extrapolated: list | float
    target: list | float
    est_error: float
    converged: bool
    notes: dict = field(default_factory=dict)


# --- J evaluation and the Gamma Conjecture I limit -----------------------

def eval_J(ring: RingSpec, t: float, nmax: int) -> np.ndarray:
    """J(t) = e^{c1 log t} sum_n J_n t^n as a float coefficient vector."""
    if t <= 0:
        raise ValueError("t must be positive")
    rows = j_scaled(ring, nmax)
    total = np.zeros(ring.rank)
    weight = 1.0  # t^n / n!
    biggest = last = 0.0
    for n in range(nmax + 1):
        term = rows[n] * weight
        total += term
        if rows[n].any():
            last = np.max(np.abs(term))
            biggest = max(biggest, last)
        weight *= t / (n + 1)
    if last > 1e-13 * (1 + biggest):
        raise ArithmeticError(f"J series tail not converged at nmax={nmax}")
    # e^{rho log t}: nilpotent exponential applied via cup with c1
    c1 = ring.c1()
    c1m = np.zeros((ring.rank, ring.rank))
    for j in range(ring.rank):
        e = ring.zero()
        e.coeffs[j] = 1
        c1m[:, j] = [float(x) for x in cup(c1, e).coeffs]
    logt = math.log(t)
    out = total.copy()
    term = total.copy()
    for k in range(1, ring.dim + 1):
        term = (logt / k) * (c1m @ term)
        out += term
    return out


def limit_ratio(ring: RingSpec, t_grid, nmax: int = None, tol: float = 1e-6) -> LimitReport:
    """Componentwise J(t) / <[pt], J(t)>, compared against the Gamma class."""
    if nmax is None:
        nmax = max(80, int(6 * ring.N * max(t_grid)))
    values = []
    for t in t_grid:
        J = eval_J(ring, t, nmax)
        if J[0] == 0:
            raise ArithmeticError(f"degree-0 part of J vanished at t={t}")
        values.append((J / J[0]).tolist())
    target = [float(c) for c in gamma_class(ring).coeffs]
    est_error = max(abs(a - b) for a, b in zip(values[-1], values[-2])) if len(values) > 1 else float("inf")
    gap = max(abs(a - b) for a, b in zip(values[-1], target))
    return LimitReport(grid=list(t_grid), values=values, extrapolated=values[-1],
                       target=target, est_error=est_error, converged=gap < tol,
                       notes={"gap_to_gamma": gap})


# --- Apery ratios --------------------------------------------------------

def apery_precondition(ring: RingSpec, g: CohClass) -> bool:
    """c_1 cap gamma = 0, checked exactly: (g, c1 cup b) = 0 for all basis b."""
    c1 = ring.c1()
    for j in range(ring.rank):
        e = ring.zero()
        e.coeffs[j] = 1
        if poincare_pair(g, cup(c1, e)) != 0:
            return False
    return True


def apery_ratios(ring: RingSpec, g: CohClass, n_grid, tol: float = 1e-6) -> LimitReport:
    """<gamma, J_{r_F n}> / <[pt], J_{r_F n}> along n_grid, against the
    Gamma-class target <gamma, Gamma> / <[pt], Gamma>.  g is the Poincare
    dual of gamma (a cohomology class with exact integer coefficients)."""
    if not apery_precondition(ring, g):
        raise ValueError("c1 cap gamma != 0; Apery limit needs a primitive class")
    rf = ring.fano_index
    rows = j_scaled(ring, rf * max(n_grid))
    pair_idx = [(j, poincare_pair(g, _basis_elt(ring, j))) for j in range(ring.rank)]
    pair_idx = [(j, c) for j, c in pair_idx if c != 0]
    values, skipped = [], []
    for n in n_grid:
        row = rows[rf * n]
        denom = row[0]
        if denom == 0:
            skipped.append(n)
            continue
        num = sum(float(c) * row[j] for j, c in pair_idx)
        values.append(num / denom)
    gam = gamma_class(ring)
    target = float(sum(c * poincare_pair(g, _basis_elt(ring, j))
                       for j, c in enumerate(gam.coeffs) if c != 0) / gam.coeffs[0])
    gap = abs(values[-1] - target) if values else float("inf")
    est_error = abs(values[-1] - values[-2]) if len(values) > 1 else float("inf")
    return LimitReport(grid=[n for n in n_grid if n not in skipped], values=values,
                       extrapolated=values[-1] if values else None, target=target,
                       est_error=est_error, converged=gap < tol,
                       notes={"gap": gap, "skipped": skipped})


def _basis_elt(ring: RingSpec, j: int) -> CohClass:
    e = ring.zero()
    e.coeffs[j] = 1
    return e


# --- radius of the regularized quantum period ----------------------------

def radius_estimate(scaled_Gn, tail_start: int = None) -> dict:
    """Estimate limsup |n! G_n|^{1/n} from the scaled sequence a_n = n! G_n.

    Returns the plain running sup over the tail and a consecutive-ratio
    refinement |a_n / a_m|^{1/(n-m)} (successive nonzero terms), which
    cancels the slowly-decaying polynomial prefactor."""
    a = [abs(float(x)) for x in scaled_Gn]
    if len(a) < 100:
        raise ValueError("need at least 100 terms")
    if tail_start is None:
        tail_start = len(a) // 2
    support = [n for n in range(1, len(a)) if a[n] > 0]
    if not support or support[-1] < tail_start:
        raise ValueError("all-zero tail")
    sup_raw = max(a[n] ** (1.0 / n) for n in support if n >= tail_start)
    ratios = [(a[n] / a[m]) ** (1.0 / (n - m))
              for m, n in zip(support, support[1:]) if n >= tail_start]
    return {"sup_raw": sup_raw, "ratio_refined": max(ratios) if ratios else sup_raw}


# --- Mellin-Barnes solution Psi ------------------------------------------

def mellin_psi(N: int, t: float, c: float = 1.0, nodes_per_unit: int = 32) -> float:
    """(1/2 pi i) int_{c-iH}^{c+iH} Gamma(s)^N t^{-Ns} ds by composite
    Gauss-Legendre; H from the Stirling decay e^{-N pi |y| / 2}."""
    if not (1 <= N <= 6):
        raise ValueError("Psi is supported for 1 <= N <= 6")
    if c <= 0 or t <= 0:
        raise ValueError("need c > 0 and t > 0")
    H = math.ceil(2.0 / (N * math.pi) * (46 + abs(N * c * math.log(t))) + 2)
    x, w = np.polynomial.legendre.leggauss(nodes_per_unit)
    total = 0.0
    for k in range(-H, H):
        y = k + (x + 1) / 2
        s = c + 1j * y
        vals = scipy.special.gamma(s) ** N * t ** (-N * s)
        total += np.sum(w * vals) / 2
    return float((total / (2 * math.pi)).real)


def frobenius_Pi(N: int, t, nmax: int = 80) -> list:
    """Pi(t; h) = e^{-N h log t} sum_n prod_{k=1}^n (h-k)^{-N} t^{Nn} in
    C[h]/(h^N); returns the N coefficients (mpmath reals)."""
    if t <= 0:
        raise ValueError("t must be positive")
    t = mpf(t)
    cap = N - 1
    series = [mpf(0)] * N
    prod_inv = [mpf(1)] + [mpf(0)] * cap   # prod (h-k)^{-N} for k <= n
    tn = mpf(1)
    n = 0
    while True:
        for p in range(N):
            series[p] += prod_inv[p] * tn
        n += 1
        tpow = t ** N
        tn = tn * tpow
        for _ in range(N):
            prod_inv = _series_mul_inv_linear(prod_inv, n, cap)
        if n > 3 and tn * max(abs(x) for x in prod_inv) < mpf("1e-45") and n >= nmax // 2:
            break
        if n > nmax:
            break
    # multiply by e^{-N h log t}
    lt = -N * mp_log(t)
    expf = [lt ** p / math.factorial(p) for p in range(N)]
    return _series_mul(series, expf, cap)


def _series_mul(a, b, cap):
    out = [mpf(0)] * (cap + 1)
    for i, x in enumerate(a):
        if i > cap or x == 0:
            continue
        for j, y in enumerate(b):
            if i + j <= cap:
                out[i + j] += x * y
    return out


def _series_mul_inv_linear(a, k, cap):
    """Multiply the truncated series a(h) by 1/(h-k) = -(1/k) sum (h/k)^j."""
    inv = [-(mpf(1) / k) * (mpf(1) / k) ** j for j in range(cap + 1)]
    return _series_mul(a, inv, cap)


def psi_residue_sum(N: int, t, nmax: int = 80) -> float:
    """Sum of residues: sum_n int_P Gamma(1+h)^N prod_{k<=n}(h-k)^{-N}
    t^{Nn - Nh}; term-by-term, so it is an independent route from
    int_P Gamma-hat cup Pi."""
    t = mpf(t)
    cap = N - 1
    lg = log_gamma_coeffs(cap if cap >= 1 else 1)
    gam = _series_exp([N * c for c in lg[:cap + 1]] + [mpf(0)] * max(0, cap + 1 - len(lg)), cap)
    lt = -N * mp_log(t)
    expf = [lt ** p / math.factorial(p) for p in range(N)]
    base = _series_mul(gam, expf, cap)

    total = mpf(0)
    prod_inv = [mpf(1)] + [mpf(0)] * cap
    tn = mpf(1)
    for n in range(nmax + 1):
        if n > 0:
            tn = tn * t ** N
            for _ in range(N):
                prod_inv = _series_mul_inv_linear(prod_inv, n, cap)
        term = _series_mul(base, prod_inv, cap)[cap] * tn
        total += term
        if n > 3 * int(t) + 6 and abs(term) < mpf("1e-45") * (1 + abs(total)):
            break
    return float(total)


def _series_exp(a, cap):
    """exp of a truncated series with zero constant term."""
    out = [mpf(1)] + [mpf(0)] * cap
    term = [mpf(1)] + [mpf(0)] * cap
    for k in range(1, cap + 1):
        term = [x / k for x in _series_mul(term, a, cap)]
        out = [x + y for x, y in zip(out, term)]
    return out


def psi_gamma_pi(N: int, t) -> float:
    """int_P Gamma-hat_P cup Pi(t; h): the connection-formula route."""
    ring = build_ring("P", N)
    gam = gamma_class(ring).coeffs        # coefficients of h^0..h^{N-1}
    Pi = frobenius_Pi(N, t)
    total = sum(gam[k] * Pi[N - 1 - k] for k in range(N))
    return float(total)


def psi_asymptotic_constant(N: int, t_grid) -> dict:
    """Estimate C in Psi(t) ~ C t^{-(N-1)/2} e^{-Nt}; quadratic-in-1/t
    Richardson on the last three grid values; target N^{-1/2}(2 pi)^{(N-1)/2}."""
    old = mp.dps
    mp.dps = 60
    try:
        vals = []
        for t in t_grid:
            psi = mpf(0)
            # residue sum at high precision (entire series, heavy cancellation)
            cap = N - 1
            lg = log_gamma_coeffs(max(cap, 1))
            gam = _series_exp([N * c for c in lg[:cap + 1]] + [mpf(0)] * max(0, cap + 1 - len(lg)), cap)
            Pi = frobenius_Pi(N, t, nmax=int(6 * t) + 40)
            psi = sum(gam[k] * Pi[N - 1 - k] for k in range(N))
            vals.append(psi * mpf(t) ** (mpf(N - 1) / 2) * mp_exp(N * mpf(t)))
        extrap = _richardson3([mpf(t) for t in t_grid[-3:]], vals[-3:]) if len(vals) >= 3 else vals[-1]
        target = mpf(N) ** mpf("-0.5") * TWO_PI ** (mpf(N - 1) / 2)
        return {"grid": list(t_grid), "values": [float(v) for v in vals],
                "extrapolated": float(extrap), "target": float(target),
                "abs_error": float(abs(extrap - target))}
    finally:
        mp.dps = old


def _richardson3(ts, vals):
    """Fit v = C + a/t + b/t^2 through three points; return C."""
    x = [1 / t for t in ts]
    # Lagrange extrapolation to x = 0
    C = mpf(0)
    for i in range(3):
        li = mpf(1)
        for j in range(3):
            if j != i:
                li *= (0 - x[j]) / (x[i] - x[j])
        C += vals[i] * li
    return C
