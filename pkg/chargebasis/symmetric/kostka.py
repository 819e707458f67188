"""
Kostka Numbers
==============

K_{lam,gamma} three ways (semistandard count, descent sets of standard
tableaux, descent sets of permutations) and the Kostka matrix of a degree
together with its exact inverse.
"""

import logging
from typing import Dict, Sequence, Tuple

from cachetools import cached, LRUCache

from ..combinatorics.enumeration import enumerate_ssyt, enumerate_syt
from ..combinatorics.partitions import (
    Partition,
    enumerate_partitions,
    make_composition,
    make_partition,
    partial_sums,
)
from ..combinatorics.tableaux import descent_set_tableau
from ..permutations.rsk import insertion_tableau
from ..permutations.stats import all_permutations, descent_set
from ..utils.errors import ChargeBasisError, InvalidPartitionError
from ..utils.locks import cache_lock

logger = logging.getLogger(__name__)

Matrix = Dict[Partition, Dict[Partition, int]]


def _check_sizes(lam: Partition, gamma: Tuple[int, ...]):
    if sum(lam) != sum(gamma):
        raise InvalidPartitionError(f"|{lam}| != |{gamma}|")


def kostka_ssyt(lam: Sequence[int], gamma: Sequence[int]) -> int:
    """Number of semistandard tableaux of shape lam and content gamma."""
    lam, gamma = make_partition(lam), make_composition(gamma)
    _check_sizes(lam, gamma)
    return len(enumerate_ssyt(lam, gamma))


def kostka_descent(lam: Sequence[int], gamma: Sequence[int]) -> int:
    """Number of standard tableaux of shape lam whose descents are partial sums of gamma."""
    lam, gamma = make_partition(lam), make_composition(gamma)
    _check_sizes(lam, gamma)
    allowed = partial_sums(gamma)
    return sum(1 for t in enumerate_syt(lam) if descent_set_tableau(t) <= allowed)


def kostka_by_permutations(lam: Sequence[int], gamma: Sequence[int]) -> int:
    """
    Permutations of insertion shape lam with descents among the partial sums
    of gamma, divided by the number of standard tableaux of shape lam.
    """
    lam, gamma = make_partition(lam), make_composition(gamma)
    _check_sizes(lam, gamma)
    allowed = partial_sums(gamma)
    count = sum(
        1 for w in all_permutations(sum(lam))
        if descent_set(w) <= allowed and tuple(len(r) for r in insertion_tableau(w)) == lam
    )
    return count // len(enumerate_syt(lam))


def kostka(lam: Sequence[int], gamma: Sequence[int]) -> int:
    """
    K_{lam,gamma}, computed by semistandard count and by standard descents.

    Raises:
        InvalidPartitionError: if |lam| != |gamma|
        ChargeBasisError: if the two counts disagree
    """
    by_ssyt = kostka_ssyt(lam, gamma)
    by_descent = kostka_descent(lam, gamma)
    if by_ssyt != by_descent:
        raise ChargeBasisError(
            f"Kostka mismatch for {tuple(lam)}, {tuple(gamma)}: {by_ssyt} vs {by_descent}"
        )
    return by_ssyt


def partitions_descending(n: int) -> Tuple[Partition, ...]:
    """Partitions of n in decreasing lexicographic order, a linear extension of dominance."""
    return tuple(reversed(enumerate_partitions(n)))


@cached(cache=LRUCache(maxsize=16), lock=cache_lock)
def kostka_matrix(n: int) -> Matrix:
    """K[lam][mu] for all partitions of n."""
    parts = partitions_descending(n)
    return {lam: {mu: kostka_ssyt(lam, mu) for mu in parts} for lam in parts}


@cached(cache=LRUCache(maxsize=16), lock=cache_lock)
def inverse_kostka_matrix(n: int) -> Matrix:
    """
    Exact inverse of the Kostka matrix by back-substitution.

    K is upper unitriangular when partitions are listed in decreasing
    lexicographic order, so the inverse is too.
    """
    parts = partitions_descending(n)
    k = kostka_matrix(n)
    inverse: Matrix = {lam: {mu: 0 for mu in parts} for lam in parts}
    for col, mu in enumerate(parts):
        inverse[mu][mu] = 1
        for row in range(col - 1, -1, -1):
            lam = parts[row]
            inverse[lam][mu] = -sum(
                k[lam][parts[j]] * inverse[parts[j]][mu] for j in range(row + 1, col + 1)
            )
    logger.debug(f"inverted Kostka matrix of degree {n} ({len(parts)} partitions)")
    return inverse
