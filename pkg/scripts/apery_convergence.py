#!/usr/bin/env python3
"""Print the convergence of the Apery-style ratio on G(2,5) toward
zeta(2) = pi^2/6, together with the Gamma-class target.

Usage: python3 scripts/apery_convergence.py [nmax]
"""

import math
import sys

from qgamma.rings import build_ring
from qgamma.asympt import apery_ratios


def main():
    nmax = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    ring = build_ring("G", 5, 2)
    g = ring.basis_class((3, 1)) - ring.basis_class((2, 2))
    grid = [n for n in range(2, nmax + 1, 2)]
    rep = apery_ratios(ring, g, grid)
    print(f"{'n':>4}  {'ratio':>22}  {'|ratio - target|':>16}")
    for n, v in zip(rep.grid, rep.values):
        print(f"{n:>4}  {v:>22.15f}  {abs(v - rep.target):>16.3e}")
    print()
    print(f"Gamma-class target: {rep.target:.15f}")
    print(f"zeta(2) = pi^2/6:   {math.pi ** 2 / 6:.15f}")
    print(f"final gap: {rep.notes['gap']:.3e}")


if __name__ == "__main__":
    main()
