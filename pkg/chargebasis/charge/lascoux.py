"""
Charge on words of partition content, by standard subword extraction.
"""

from typing import List, Sequence, Tuple

from ..combinatorics.partitions import Partition, is_partition, n_statistic
from ..utils.errors import InvalidWordError


def content(word: Sequence[int]) -> Tuple[int, ...]:
    if not word:
        return ()
    return tuple(list(word).count(v) for v in range(1, max(word) + 1))


def _extract_standard_subword(word: List[int], alive: List[bool]) -> int:
    """
    Remove one standard subword from the live letters and return its charge.

    Scanning right to left, cyclically, pick 1 then 2 and so on up to the
    largest remaining letter. The index rises by one each time the scan wraps.
    """
    n = len(word)
    top = max(word[p] for p in range(n) if alive[p])
    position = n
    index = 0
    total = 0
    for letter in range(1, top + 1):
        found = None
        for p in range(position - 1, -1, -1):
            if alive[p] and word[p] == letter:
                found = p
                break
        if found is None:
            index += 1
            for p in range(n - 1, position - 1, -1):
                if alive[p] and word[p] == letter:
                    found = p
                    break
        if found is None:
            raise InvalidWordError(f"letter {letter} missing from standard subword")
        total += index
        alive[found] = False
        position = found
    return total


def charge_on_content_word(word: Sequence[int], weight: Sequence[int] = None) -> int:
    """
    Lascoux-Schutzenberger charge of a word whose content is a partition.

    Args:
        word: Letters 1..l
        weight: Expected content; checked against the word when given

    Raises:
        InvalidWordError: if the content is not a partition or differs from weight
    """
    word = [int(x) for x in word]
    observed = content(word)
    if any(x < 1 for x in word) or not is_partition(observed):
        raise InvalidWordError(f"content {observed} of {tuple(word)} is not a partition")
    if weight is not None and tuple(weight) != observed:
        raise InvalidWordError(f"word content {observed} does not match weight {tuple(weight)}")
    alive = [True] * len(word)
    total = 0
    while any(alive):
        total += _extract_standard_subword(word, alive)
    return total


def cocharge_on_content_word(word: Sequence[int]) -> int:
    """n(mu) - charge, mu the content of word."""
    mu: Partition = content(word)
    return n_statistic(mu) - charge_on_content_word(word)
