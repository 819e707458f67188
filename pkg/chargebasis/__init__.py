"""
Chargebasis - Charge Monomial Bases of Garsia-Procesi Rings
===========================================================

Exact combinatorics of charge, catabolism and Blasiak insertion, the
charge monomial bases C_mu and their antisymmetrized variants, modified
Hall-Littlewood functions, and Gröbner certification of these bases in the
quotient rings R_mu.

Components:
-----------
- combinatorics: partitions, tableaux, jeu de taquin, q-series
- permutations: statistics and RSK
- charge: cocharge and charge words, Lascoux-Schützenberger charge
- catabolism: catabolism, ctype, Blasiak insertion, chains insertion
- bases: C_mu, D_mu, descent and Artin bases, antisymmetric index sets
- symmetric: Kostka numbers, symmetric functions, Hall-Littlewood
- quotient: Tanisaki ideals, Buchberger, rank certification
- suites: exhaustive theorem verification
- reports: JSON, CSV and markdown output
"""

__version__ = "1.0.0"
__author__ = "Chargebasis Team"

from .core import ChargeBasisFramework

__all__ = ["ChargeBasisFramework", "__version__"]
