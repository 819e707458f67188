"""
Tableau Enumeration
===================

Standard and semistandard tableaux of a given shape, in canonical order:
lexicographic on the reading word.
"""

from typing import Dict, List, Sequence, Tuple

from cachetools import cached, LRUCache

from ..utils.errors import InvalidPartitionError
from ..utils.locks import cache_lock
from .partitions import Partition, make_partition, enumerate_partitions
from .tableaux import Tableau, reading_word


def _outer_corners(lam: Tuple[int, ...]) -> List[int]:
    """Rows whose last box can be removed leaving a partition."""
    return [r for r in range(len(lam)) if r == len(lam) - 1 or lam[r] > lam[r + 1]]


@cached(cache=LRUCache(maxsize=256), lock=cache_lock)
def _syt(lam: Partition) -> Tuple[Tableau, ...]:
    n = sum(lam)
    if n == 0:
        return ((),)
    result = []
    for r in _outer_corners(lam):
        smaller = list(lam)
        smaller[r] -= 1
        smaller_shape = tuple(p for p in smaller if p > 0)
        for tableau in _syt(smaller_shape):
            rows = [list(row) for row in tableau]
            if r == len(rows):
                rows.append([n])
            else:
                rows[r].append(n)
            result.append(tuple(tuple(row) for row in rows))
    return tuple(sorted(result, key=reading_word))


def enumerate_syt(lam: Sequence[int]) -> Tuple[Tableau, ...]:
    """All standard Young tableaux of shape lam, ordered by reading word."""
    return _syt(make_partition(lam))


def enumerate_all_syt(n: int) -> Tuple[Tableau, ...]:
    """Standard tableaux of every shape of size n, shapes in partition order."""
    return tuple(t for lam in enumerate_partitions(n) for t in _syt(lam))


def _horizontal_strips(shape: Tuple[int, ...], bound: Tuple[int, ...], k: int):
    """
    Ways to add k boxes to ``shape`` with no two in a column, staying inside
    ``bound``. Yields the new row lengths.
    """
    rows = len(bound)
    current = list(shape) + [0] * (rows - len(shape))

    def extend(r: int, remaining: int, new: List[int]):
        if r == rows:
            if remaining == 0:
                yield tuple(new)
            return
        limit = bound[r] if r == 0 else min(bound[r], current[r - 1])
        for added in range(0, min(remaining, limit - current[r]) + 1):
            yield from extend(r + 1, remaining - added, new + [current[r] + added])

    yield from extend(0, k, [])


@cached(cache=LRUCache(maxsize=1024), lock=cache_lock)
def _ssyt(lam: Partition, weight: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    states: List[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]]] = [
        ((0,) * len(lam), tuple(() for _ in lam))
    ]
    for value, count in enumerate(weight, start=1):
        next_states = []
        for current, rows in states:
            for new in _horizontal_strips(current, lam, count):
                filled = tuple(
                    row + (value,) * (new[r] - current[r]) for r, row in enumerate(rows)
                )
                next_states.append((new, filled))
        states = next_states
    result = [rows for current, rows in states if current == lam]
    return tuple(sorted(result, key=reading_word))


def enumerate_ssyt(lam: Sequence[int], weight: Sequence[int]) -> Tuple[Tableau, ...]:
    """
    All semistandard tableaux of shape lam and content weight.

    Args:
        lam: Partition shape
        weight: Composition; weight[v - 1] copies of the value v

    Returns:
        Tableaux ordered by reading word; empty when sizes differ
    """
    lam = make_partition(lam)
    weight = tuple(int(w) for w in weight)
    if any(w < 0 for w in weight):
        raise InvalidPartitionError(f"negative weight {weight}")
    if sum(weight) != sum(lam):
        return ()
    return _ssyt(lam, weight)


def syt_count_by_shape(n: int) -> Dict[Partition, int]:
    return {lam: len(_syt(lam)) for lam in enumerate_partitions(n)}
