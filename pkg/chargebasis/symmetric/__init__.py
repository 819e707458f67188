"""
Symmetric Functions Module
==========================

Fixed-degree symmetric functions over Z[q] and the Hall-Littlewood
expansions built from charge and catabolizability.

Components:
-----------
- kostka: Kostka numbers by three routes, Kostka matrix and inverse
- functions: SymmetricFunction, basis conversion, omega, Hall inner product
- hall_littlewood: q-Kostka, H~_mu by two routes, <e_gamma, H~_{mu^t}>
"""

from ..combinatorics.qseries import QPolynomial
from .kostka import (
    kostka,
    kostka_ssyt,
    kostka_descent,
    kostka_by_permutations,
    kostka_matrix,
    inverse_kostka_matrix,
    partitions_descending,
)
from .functions import (
    BASES,
    SymmetricFunction,
    schur,
    complete,
    elementary,
    monomial,
    to_basis,
    omega,
    hall_inner_product,
    evaluate_at_one,
    monomial_coefficient,
)
from .hall_littlewood import (
    qkostka,
    qkostka_modified,
    modified_hl,
    modified_hl_by_qkostka,
    e_coeff_combinatorial,
    e_coeff_symmetric,
)

__all__ = [
    "QPolynomial",
    "kostka",
    "kostka_ssyt",
    "kostka_descent",
    "kostka_by_permutations",
    "kostka_matrix",
    "inverse_kostka_matrix",
    "partitions_descending",
    "BASES",
    "SymmetricFunction",
    "schur",
    "complete",
    "elementary",
    "monomial",
    "to_basis",
    "omega",
    "hall_inner_product",
    "evaluate_at_one",
    "monomial_coefficient",
    "qkostka",
    "qkostka_modified",
    "modified_hl",
    "modified_hl_by_qkostka",
    "e_coeff_combinatorial",
    "e_coeff_symmetric",
]
