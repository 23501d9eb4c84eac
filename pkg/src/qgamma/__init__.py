"""Computational companion to the Gamma Conjectures for P^{N-1} and G(r,N)."""

__version__ = "0.1.0"
