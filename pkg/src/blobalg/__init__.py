"""Exact combinatorics of graded decomposition data for two-boundary
Temperley-Lieb (symplectic blob) algebras.

Submodules:

* laurent     sparse integer Laurent polynomials and the bar split
* params      parameter configurations, residues, lattice geometry
* tableaux    one-row standard tableaux, residue sequences, CStd sets
* paths       lattice path embeddings, tilings, degrees, reduced words
* calibrated  floating-point calibrated modules and relation checks
* decomp      graded Delta matrices, NA factorization, block structure
* cli         command line interface
"""

__version__ = "0.1.0"
