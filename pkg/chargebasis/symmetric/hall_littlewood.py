"""
Hall-Littlewood Expansions
==========================

q-Kostka polynomials from charge on semistandard reading words, the
modified Hall-Littlewood function H~_mu[X;q] by two routes, and the
coefficients <e_gamma, H~_{mu^t}> used by the antisymmetric bases.
"""

import logging
from typing import Sequence

from ..bases.antisym import antisym_index_set
from ..catabolism.catabolism import ctype_direct
from ..charge.lascoux import charge_on_content_word
from ..charge.words import tableau_cocharge
from ..combinatorics.enumeration import enumerate_all_syt, enumerate_ssyt
from ..combinatorics.partitions import (
    dominates,
    enumerate_partitions,
    make_composition,
    make_partition,
    n_statistic,
    transpose,
)
from ..combinatorics.qseries import QPolynomial, ZERO
from ..combinatorics.tableaux import reading_word, shape
from ..utils.errors import InvalidPartitionError
from .functions import SymmetricFunction, elementary, hall_inner_product

logger = logging.getLogger(__name__)


def _check_sizes(lam, mu):
    if sum(lam) != sum(mu):
        raise InvalidPartitionError(f"|{lam}| != |{mu}|")


def qkostka(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """Kostka-Foulkes polynomial K_{lam,mu}(q) = sum of q^charge over SSYT(lam, mu)."""
    lam, mu = make_partition(lam), make_partition(mu)
    _check_sizes(lam, mu)
    return QPolynomial.from_degrees(
        charge_on_content_word(reading_word(t), mu) for t in enumerate_ssyt(lam, mu)
    )


def qkostka_modified(lam: Sequence[int], mu: Sequence[int]) -> QPolynomial:
    """
    K~_{lam,mu}(q) = q^n(mu) K_{lam,mu}(1/q), the sum of q^cocharge over
    semistandard tableaux of shape lam and weight mu.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    _check_sizes(lam, mu)
    top = n_statistic(mu)
    return QPolynomial.from_degrees(
        top - charge_on_content_word(reading_word(t), mu) for t in enumerate_ssyt(lam, mu)
    )


def modified_hl(mu: Sequence[int]) -> SymmetricFunction:
    """
    H~_mu[X;q] in the Schur basis: sum over standard tableaux T with
    ctype(T) dominating mu of q^cocharge(T) s_shape(T).
    """
    mu = make_partition(mu)
    n = sum(mu)
    coeffs = {}
    for t in enumerate_all_syt(n):
        if dominates(ctype_direct(t), mu):
            lam = shape(t)
            coeffs[lam] = coeffs.get(lam, ZERO) + QPolynomial.monomial(tableau_cocharge(t))
    return SymmetricFunction(n, "s", coeffs)


def modified_hl_by_qkostka(mu: Sequence[int]) -> SymmetricFunction:
    """H~_mu[X;q] as sum over lam of K~_{lam,mu}(q) s_lam."""
    mu = make_partition(mu)
    n = sum(mu)
    return SymmetricFunction(
        n, "s", {lam: qkostka_modified(lam, mu) for lam in enumerate_partitions(n)}
    )


def e_coeff_combinatorial(mu: Sequence[int], gamma: Sequence[int]) -> QPolynomial:
    """Sum of q^charge(w) over the antisymmetric index set of (mu, gamma)."""
    index_set = antisym_index_set(mu, gamma)
    return QPolynomial.from_degrees(entry.charge for entry in index_set.entries)


def e_coeff_symmetric(mu: Sequence[int], gamma: Sequence[int]) -> QPolynomial:
    """<e_gamma, H~_{mu^t}[X;q]> through basis conversion."""
    mu = make_partition(mu)
    gamma = make_composition(gamma)
    _check_sizes(mu, gamma)
    return hall_inner_product(elementary(gamma), modified_hl(transpose(mu)))
