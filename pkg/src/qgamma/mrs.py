"""Semiorthonormal bases and marked reflection systems: Gram matrices,
mutations, the braid action, admissibility, phase-rotation mutation
sequences, Stokes matrices, and wedge products.

Vectors are any objects supporting +, -, and scalar multiplication
(CohClass, numpy arrays, or WedgeVec); the pairing is an explicit callable,
so the same machinery runs on abstract integer Grams and on Gamma-basis
cohomology classes."""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, replace

import numpy as np

from .rings import det_small


@dataclass
class SOB:
    vectors: list
    pairing: object       # callable (v, w) -> scalar, [v, w)


@dataclass
class MRS:
    vectors: list
    markings: list        # complex marking u_i per vector
    phase: float
    pairing: object


def gram(sob) -> np.ndarray:
    n = len(sob.vectors)
    g = np.zeros((n, n), dtype=complex)
    for i in range(n):
        for j in range(n):
            g[i, j] = complex(sob.pairing(sob.vectors[i], sob.vectors[j]))
    return g


def is_uni_uppertriangular(g: np.ndarray, tol: float = 1e-9) -> bool:
    n = g.shape[0]
    for i in range(n):
        if abs(g[i, i] - 1) > tol:
            return False
        for j in range(i):
            if abs(g[i, j]) > tol:
                return False
    return True


def right_mutation(v, u, pairing):
    """R_u v = v - [v, u) u."""
    return v - pairing(v, u) * u


def left_mutation(v, u, pairing):
    """L_u v = v - [u, v) u."""
    return v - pairing(u, v) * u


def braid_act(sob: SOB, word) -> SOB:
    """word: list of signed 1-based indices; +i applies sigma_i, -i its
    inverse.  sigma_i: (v_i, v_{i+1}) -> (v_{i+1}, R_{v_{i+1}} v_i)."""
    vs = list(sob.vectors)
    for g in word:
        i = abs(g) - 1
        if not (0 <= i < len(vs) - 1):
            raise ValueError(f"braid generator {g} out of range")
        if g > 0:
            vs[i], vs[i + 1] = vs[i + 1], right_mutation(vs[i], vs[i + 1], sob.pairing)
        else:
            vs[i], vs[i + 1] = left_mutation(vs[i + 1], vs[i], sob.pairing), vs[i]
    return SOB(vectors=vs, pairing=sob.pairing)


def h_phase(u: complex, phi: float) -> float:
    return (cmath.exp(-1j * phi) * u).imag


def is_admissible(markings, phi: float, tol: float = 1e-10) -> bool:
    """True iff e^{i phi} is not parallel to any difference of distinct
    markings (checked on the sine of the angle)."""
    for u, v in itertools.combinations(markings, 2):
        d = u - v
        if abs(d) < tol:
            continue
        if abs((d * cmath.exp(-1j * phi)).imag) / abs(d) < tol:
            return False
    return True


def sort_by_phase(mrs: MRS) -> SOB:
    """Vectors ordered by strictly decreasing h_phi(u); ties allowed only
    for equal markings (kept in input order)."""
    if not is_admissible(mrs.markings, mrs.phase):
        raise ValueError(f"phase {mrs.phase} is not admissible")
    order = sorted(range(len(mrs.vectors)),
                   key=lambda i: (-h_phase(mrs.markings[i], mrs.phase), i))
    return SOB(vectors=[mrs.vectors[i] for i in order], pairing=mrs.pairing)


def stokes_matrix(mrs: MRS, tol: float = 1e-9) -> np.ndarray:
    """Gram matrix in phase order; asserts unit diagonal, vanishing lower
    triangle, and vanishing entries between equal distinct markings."""
    sob = sort_by_phase(mrs)
    g = gram(sob)
    if not is_uni_uppertriangular(g, tol):
        raise ArithmeticError("phase-ordered Gram is not uni-uppertriangular")
    order = sorted(range(len(mrs.vectors)),
                   key=lambda i: (-h_phase(mrs.markings[i], mrs.phase), i))
    u = [mrs.markings[i] for i in order]
    for i in range(len(u)):
        for j in range(len(u)):
            if i != j and abs(u[i] - u[j]) < tol and abs(g[i, j]) > tol:
                raise ArithmeticError("nonzero Gram entry between equal markings")
    return g


# --- phase rotation ------------------------------------------------------

def _marking_groups(markings, tol=1e-9):
    groups = []
    for i, u in enumerate(markings):
        for g in groups:
            if abs(markings[g[0]] - u) < tol:
                g.append(i)
                break
        else:
            groups.append([i])
    return groups


def mutate_phase_rotation(mrs: MRS, phi_target: float):
    """Continuously rotate the phase to phi_target, applying the block
    mutation at every crossing of a non-admissible direction.

    Convention: when the phase decreases through phi_c = arg(u_j - u_i), the
    marking u_j crosses the ray u_i + R_{>=0} e^{i phi} from the side of
    smaller h_phi, and the u_i-block is right-mutated by the u_j-block.
    Increasing phase gives left mutations.  Returns (new MRS, log)."""
    phi0, phi1 = mrs.phase, phi_target
    decreasing = phi1 < phi0
    groups = _marking_groups(mrs.markings)
    reps = {g[0]: [i for i in g] for g in groups}

    events = []   # (phi_c along the path, gi, gj, |d|)
    for gi in reps:
        for gj in reps:
            if gi == gj:
                continue
            d = mrs.markings[gj] - mrs.markings[gi]
            theta = math.atan2(d.imag, d.real)
            # all representatives theta + 2 pi k strictly inside the path
            if decreasing:
                k = math.floor((phi0 - theta) / (2 * math.pi))
                c = theta + 2 * math.pi * k
                while c > phi1:
                    if c < phi0 - 1e-12:
                        events.append((c, gi, gj, abs(d)))
                    c -= 2 * math.pi
            else:
                k = math.ceil((phi0 - theta) / (2 * math.pi))
                c = theta + 2 * math.pi * k
                while c < phi1:
                    if c > phi0 + 1e-12:
                        events.append((c, gi, gj, abs(d)))
                    c += 2 * math.pi
    events.sort(key=lambda e: (-e[0] if decreasing else e[0], -e[3]))

    vectors = list(mrs.vectors)
    log = []
    for phi_c, gi, gj, _ in events:
        block_j = reps[gj]
        for idx in reps[gi]:
            v = vectors[idx]
            if decreasing:
                for k in block_j:
                    v = v - mrs.pairing(v, vectors[k]) * vectors[k]
            else:
                for k in block_j:
                    v = v - mrs.pairing(vectors[k], v) * vectors[k]
            vectors[idx] = v
        log.append({"crossing_angle": phi_c,
                    "moved_marking": complex(mrs.markings[gj]),
                    "affected_indices": list(reps[gi]),
                    "direction": "R" if decreasing else "L"})
    return replace(mrs, vectors=vectors, phase=phi_target), log


# --- wedges --------------------------------------------------------------

@dataclass
class WedgeVec:
    """Formal linear combination of decomposable wedges; terms are
    (coefficient, tuple-of-factor-vectors)."""
    terms: tuple

    def __add__(self, other):
        return WedgeVec(self.terms + other.terms)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return WedgeVec(tuple((scalar * c, f) for c, f in self.terms))


def wedge_pairing_from(base_pairing):
    def pairing(a: WedgeVec, b: WedgeVec):
        total = 0
        for ca, fa in a.terms:
            for cb, fb in b.terms:
                m = [[base_pairing(x, y) for y in fb] for x in fa]
                total = total + ca * cb * det_small(m)
        return total
    return pairing


def wedge_mrs(mrs: MRS, r: int, verify: bool = False, tol: float = 1e-9) -> MRS:
    """Wedge MRS: vectors v_{i_1} ^ ... ^ v_{i_r} (i_1 < ... < i_r),
    pairing det([v_{i_a}, v_{j_b})), markings u_{i_1} + ... + u_{i_r}."""
    n = len(mrs.vectors)
    if not (1 <= r <= n):
        raise ValueError("wedge degree out of range")
    vectors, markings = [], []
    for combo in itertools.combinations(range(n), r):
        vectors.append(WedgeVec(((1, tuple(mrs.vectors[i] for i in combo)),)))
        markings.append(sum(mrs.markings[i] for i in combo))
    pairing = wedge_pairing_from(mrs.pairing)
    out = MRS(vectors=vectors, markings=markings, phase=mrs.phase, pairing=pairing)
    if verify:
        _verify_mrs(out, tol)
    return out


def _verify_mrs(mrs: MRS, tol: float = 1e-9):
    """Semiorthonormality: [v_i, v_j) = delta_ij when h(u_i) <= h(u_j);
    equal-marking vectors orthogonal both ways."""
    n = len(mrs.vectors)
    for i in range(n):
        d = complex(mrs.pairing(mrs.vectors[i], mrs.vectors[i]))
        if abs(d - 1) > tol:
            raise ArithmeticError(f"[v_{i}, v_{i}) = {d} != 1")
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            hi, hj = h_phase(mrs.markings[i], mrs.phase), h_phase(mrs.markings[j], mrs.phase)
            if hi <= hj + tol:
                v = complex(mrs.pairing(mrs.vectors[i], mrs.vectors[j]))
                if abs(v) > tol and not (hi > hj - tol and abs(mrs.markings[i] - mrs.markings[j]) > tol):
                    raise ArithmeticError(f"semiorthonormality fails at ({i},{j}): {v}")


# --- Gamma-basis MRSs ----------------------------------------------------

def beilinson_gamma_mrs(N: int, phase: float = -0.05) -> MRS:
    """Vectors Gamma-hat_P Ch(O(j)), markings N e^{-2 pi i j / N}."""
    from .rings import build_ring, cup
    from .charclasses import gamma_class, ch_modified, line_on_P, bracket_pairing
    ring = build_ring("P", N)
    gam = gamma_class(ring)
    vectors = [cup(gam, ch_modified(line_on_P(ring, j))) for j in range(N)]
    markings = [N * cmath.exp(-2j * math.pi * j / N) for j in range(N)]
    return MRS(vectors=vectors, markings=markings, phase=phase,
               pairing=bracket_pairing)


def kapranov_markings(r: int, N: int) -> list:
    """Marking of S^nu V*: sum of rotated P-markings at exponents
    k = (nu_1 + r - 1, ..., nu_r)."""
    from .rings import build_ring
    ring = build_ring("G", N, r)
    rot = cmath.exp(1j * math.pi * (r - 1) / N)
    out = []
    for nu in ring.basis:
        padded = list(nu) + [0] * (r - len(nu))
        ks = [padded[i] + r - 1 - i for i in range(r)]
        out.append(sum(N * rot * cmath.exp(-2j * math.pi * k / N) for k in ks))
    return out


def kapranov_gamma_mrs(r: int, N: int, phase: float = -0.05) -> MRS:
    """Vectors Gamma-hat_G Ch(S^nu V*) in degree-lex order of nu."""
    from .rings import build_ring, cup
    from .charclasses import gamma_class, kapranov_ch, bracket_pairing
    ring = build_ring("G", N, r)
    gam = gamma_class(ring)
    vectors = [cup(gam, kapranov_ch(nu, ring)) for nu in ring.basis]
    return MRS(vectors=vectors, markings=kapranov_markings(r, N), phase=phase,
               pairing=bracket_pairing)
