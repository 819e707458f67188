"""
Tanisaki ideals I_mu and the Garsia-Procesi quotients R_mu.

For mu a partition of n, I_mu is generated by the partial elementary
symmetric functions e_d(S) with S a nonempty subset of {x_1, ..., x_n} and
|S| - p_{n-|S|}(mu) < d <= |S|, where p_k(mu) counts the boxes of mu
outside its first k columns. See docs/tanisaki.md for the convention.

From e_d(S + x) = e_d(S) + x e_{d-1}(S), every e_d(S) with |S| < n and d
above the smallest allowed degree lies in the ideal of e_d(S + x) and
e_{d-1}(S). Pruned generating sets keep only the smallest degree for
proper subsets and every degree for the full set.
"""

import logging
from itertools import combinations
from math import factorial, prod
from typing import List, Optional, Sequence

from cachetools import cached, LRUCache
from sympy.polys.rings import PolyElement

from ..combinatorics.partitions import Partition, make_partition, transpose
from ..utils.errors import InvalidPartitionError
from ..utils.locks import cache_lock
from .groebner import GroebnerBasis, buchberger
from .polynomial import elementary_symmetric, polynomial_ring

logger = logging.getLogger(__name__)


def boxes_outside_columns(mu: Sequence[int], k: int) -> int:
    """p_k(mu): boxes of mu not in its first k columns."""
    return sum(transpose(make_partition(mu))[k:])


def tanisaki_generators(
    mu: Sequence[int], n: Optional[int] = None, order: str = "grevlex", prune: bool = False
) -> List[PolyElement]:
    """
    Generators e_d(S) of I_mu, subsets in lexicographic order and d increasing.

    With ``prune`` only the smallest allowed d is kept for each proper
    subset S; the ideal is unchanged.

    Raises:
        InvalidPartitionError: if mu is not a partition of n
    """
    mu = make_partition(mu)
    if n is None:
        n = sum(mu)
    if sum(mu) != n or n < 1:
        raise InvalidPartitionError(f"{mu} is not a partition of {n}")
    R = polynomial_ring(n, order)
    generators = []
    for size in range(1, n + 1):
        threshold = size - boxes_outside_columns(mu, n - size)
        lowest = max(threshold + 1, 1)
        highest = lowest if prune and size < n else size
        for subset in combinations(range(1, n + 1), size):
            for d in range(lowest, min(highest, size) + 1):
                generators.append(elementary_symmetric(R, subset, d))
    logger.debug(f"I_{mu}: {len(generators)} generators in {n} variables (pruned={prune})")
    return generators


@cached(cache=LRUCache(maxsize=64), lock=cache_lock)
def _tanisaki_basis(mu: Partition, order: str) -> GroebnerBasis:
    return buchberger(tanisaki_generators(mu, order=order, prune=True), order=order, n=sum(mu))


def tanisaki_basis(mu: Sequence[int], order: str = "grevlex") -> GroebnerBasis:
    """Reduced Gröbner basis of I_mu, cached per (mu, order)."""
    return _tanisaki_basis(make_partition(mu), order)


def quotient_dimension(mu: Sequence[int], order: str = "grevlex") -> int:
    """dim R_mu as the number of standard monomials of I_mu."""
    return tanisaki_basis(mu, order).quotient_dimension()


def expected_dimension(mu: Sequence[int]) -> int:
    """n! / (mu_1! mu_2! ...)."""
    mu = make_partition(mu)
    return factorial(sum(mu)) // prod(factorial(part) for part in mu)
