"""Monomial Hopf algebras: group data, Galois objects and biGalois groups."""

__version__ = "0.1.0"
