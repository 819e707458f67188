"""
Partitions and Compositions
===========================

Partitions are tuples of positive integers in weakly decreasing order,
stored without trailing zeros. Compositions are tuples of positive integers
in any order. Operations that need padding pad on the fly.
"""

from itertools import accumulate, zip_longest
from math import factorial, prod
from typing import FrozenSet, List, Sequence, Tuple

from cachetools import cached, LRUCache

from ..utils.errors import InvalidPartitionError
from ..utils.locks import cache_lock

Partition = Tuple[int, ...]
Composition = Tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """
    Validate and normalize a partition, dropping trailing zeros.

    Raises:
        InvalidPartitionError: if parts are negative or not weakly decreasing
    """
    values = [int(p) for p in parts]
    while values and values[-1] == 0:
        values.pop()
    if any(p <= 0 for p in values):
        raise InvalidPartitionError(f"partition parts must be positive: {tuple(parts)}")
    if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
        raise InvalidPartitionError(f"partition parts must weakly decrease: {tuple(parts)}")
    return tuple(values)


def make_composition(parts: Sequence[int]) -> Composition:
    """Validate a composition: all parts positive."""
    values = tuple(int(p) for p in parts)
    if any(p <= 0 for p in values):
        raise InvalidPartitionError(f"composition parts must be positive: {tuple(parts)}")
    return values


def is_partition(parts: Sequence[int]) -> bool:
    try:
        return make_partition(parts) == tuple(parts)
    except InvalidPartitionError:
        return False


def transpose(lam: Partition) -> Partition:
    """Conjugate partition: result[j] = #{i : lam_i > j}."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dominates(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """
    True iff every prefix sum of mu is at least the matching prefix sum of lam.

    Raises:
        InvalidPartitionError: if the sizes differ
    """
    if sum(mu) != sum(lam):
        raise InvalidPartitionError(f"dominance needs equal sizes: |{tuple(mu)}| != |{tuple(lam)}|")
    left = accumulate(mu)
    right = accumulate(lam)
    return all(a >= b for a, b in zip_longest(left, right, fillvalue=sum(mu)))


def n_statistic(mu: Partition) -> int:
    """n(mu) = sum of (i - 1) mu_i."""
    return sum(i * part for i, part in enumerate(mu))


def partial_sums(gamma: Sequence[int]) -> FrozenSet[int]:
    """The set {gamma_1, gamma_1 + gamma_2, ..., gamma_1 + ... + gamma_{l-1}}."""
    return frozenset(list(accumulate(gamma))[:-1])


def partwise_sum(*partitions: Partition) -> Partition:
    """Partition (lam_1 + mu_1 + ..., lam_2 + mu_2 + ..., ...)."""
    return tuple(sum(parts) for parts in zip_longest(*partitions, fillvalue=0))


def sort_composition(gamma: Sequence[int]) -> Partition:
    return tuple(sorted(gamma, reverse=True))


def padded(lam: Sequence[int], length: int) -> Tuple[int, ...]:
    if len(lam) > length:
        raise InvalidPartitionError(f"{tuple(lam)} is longer than {length}")
    return tuple(lam) + (0,) * (length - len(lam))


@cached(cache=LRUCache(maxsize=64), lock=cache_lock)
def enumerate_partitions(n: int) -> Tuple[Partition, ...]:
    """All partitions of n in increasing lexicographic order on part sequences."""
    result: List[Partition] = []

    def extend(remaining: int, largest: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(min(remaining, largest), 0, -1):
            extend(remaining - part, part, prefix + (part,))

    extend(n, n, ())
    return tuple(sorted(result))


@cached(cache=LRUCache(maxsize=64), lock=cache_lock)
def enumerate_compositions(n: int) -> Tuple[Composition, ...]:
    """All compositions of n in increasing lexicographic order."""
    if n == 0:
        return ((),)
    result: List[Composition] = []

    def extend(remaining: int, prefix: Tuple[int, ...]):
        if remaining == 0:
            result.append(prefix)
            return
        for part in range(1, remaining + 1):
            extend(remaining - part, prefix + (part,))

    extend(n, ())
    return tuple(result)


def hook_length_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape lam by the hook-length formula."""
    conj = transpose(lam)
    hooks = prod(
        (lam[i] - j) + (conj[j] - i) - 1
        for i in range(len(lam))
        for j in range(lam[i])
    )
    return factorial(sum(lam)) // hooks
