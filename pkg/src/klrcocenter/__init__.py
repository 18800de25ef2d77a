"""Exact computational algebra for cyclotomic KLR algebras.

Builds nilHecke and cyclotomic KLR algebras from their presentations,
computes graded cocenters and centers by exact linear algebra over ℚ and
F_p, and machine-checks the structural identities relating them.
"""

__version__ = "0.1.0"
