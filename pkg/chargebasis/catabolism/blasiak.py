"""
Catabolism Insertion
====================

Blasiak's catabolism insertion on cocharge words. The word is read right
to left, cyclically, skipping deleted letters. A letter a asks for a box in
row a + 1 of the partition nu; when the box fits the letter is deleted and
its position recorded in the new box, otherwise the letter becomes a + 1
and the scan moves on. On a cocharge word cc(w) the final partition is
ctype(w).

Positions are 1-based. Pair-indexed fillings store (k, i) where k counts the
reads of the letter at position p = n - i + 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from cachetools import cached, LRUCache

from ..charge.words import cocharge_word
from ..combinatorics.partitions import Partition
from ..combinatorics.tableaux import Tableau
from ..permutations.stats import Permutation, make_permutation
from ..utils.errors import InvalidTableauError, InvalidWordError, NonterminationError
from ..utils.locks import cache_lock

logger = logging.getLogger(__name__)

IndexPair = Tuple[int, int]


@dataclass(frozen=True)
class BlasiakStep:
    """One application of the insertion map."""
    position: int
    read: int
    letter: int
    row: Optional[int]


@dataclass(frozen=True)
class BlasiakResult:
    """
    Outcome of catabolism insertion.

    ``filling[r]`` lists the positions recorded in row r + 1 in the order the
    boxes were added; ``reads[p - 1]`` is the number of times position p was
    read, which is also the k of its index pair.
    """
    word: Tuple[int, ...]
    shape: Partition
    filling: Tableau
    reads: Tuple[int, ...]
    steps: int

    @property
    def n(self) -> int:
        return len(self.word)

    def index_pair(self, position: int) -> IndexPair:
        return (self.reads[position - 1], self.n - position + 1)

    def pair_filling(self) -> Tableau:
        """The filling with each position p replaced by (k_p, n - p + 1), rows sorted."""
        return tuple(
            tuple(sorted(self.index_pair(p) for p in row)) for row in self.filling
        )


def step_bound(word: Sequence[int]) -> int:
    if not word:
        return 0
    return len(word) * (max(word) + len(word))


def blasiak_steps(word: Sequence[int]) -> Iterator[BlasiakStep]:
    """
    Yield every step of the insertion; ``row`` is None when the letter was
    incremented instead of placed.

    Raises:
        InvalidWordError: if the word has negative letters
        NonterminationError: if the step bound n * (max + n) is exceeded
    """
    letters = [int(x) for x in word]
    if any(x < 0 for x in letters):
        raise InvalidWordError(f"negative letter in {tuple(word)}")
    n = len(letters)
    bound = step_bound(letters)
    alive = [True] * n
    reads = [0] * n
    nu: List[int] = []
    remaining = n
    steps = 0
    p = n
    while remaining:
        if steps >= bound:
            raise NonterminationError(
                f"catabolism insertion on {tuple(word)} did not finish in {bound} steps", steps
            )
        while not alive[p - 1]:
            p = p - 1 if p > 1 else n
        steps += 1
        reads[p - 1] += 1
        letter = letters[p - 1]
        row = letter + 1
        current = nu[row - 1] if row <= len(nu) else 0
        fits = row <= len(nu) + 1 and (row == 1 or nu[row - 2] > current)
        if fits:
            if row == len(nu) + 1:
                nu.append(1)
            else:
                nu[row - 1] += 1
            alive[p - 1] = False
            remaining -= 1
            yield BlasiakStep(p, reads[p - 1], letter, row)
        else:
            letters[p - 1] += 1
            yield BlasiakStep(p, reads[p - 1], letter, None)
        p = p - 1 if p > 1 else n


def blasiak_insertion(word: Sequence[int]) -> BlasiakResult:
    """
    Run catabolism insertion to completion.

    Args:
        word: A cocharge word

    Returns:
        BlasiakResult with the final partition and recording filling

    Raises:
        NonterminationError: if the word is not a cocharge word and the
            insertion does not finish within the step bound
    """
    word = tuple(int(x) for x in word)
    rows: List[List[int]] = []
    reads = [0] * len(word)
    steps = 0
    for step in blasiak_steps(word):
        steps += 1
        reads[step.position - 1] = step.read
        if step.row is None:
            continue
        if step.row > len(rows):
            rows.append([])
        rows[step.row - 1].append(step.position)
    shape = tuple(len(row) for row in rows)
    logger.debug(f"catabolism insertion of {word}: shape {shape} in {steps} steps")
    return BlasiakResult(
        word=word,
        shape=shape,
        filling=tuple(tuple(row) for row in rows),
        reads=tuple(reads),
        steps=steps,
    )


def blasiak_ctype(word: Sequence[int]) -> Tuple[Partition, Tableau]:
    """(ctype, recording filling) of catabolism insertion on a cocharge word."""
    result = blasiak_insertion(word)
    return result.shape, result.filling


@cached(cache=LRUCache(maxsize=65536), lock=cache_lock)
def _ctype_of_permutation(w: Permutation) -> Partition:
    return blasiak_insertion(cocharge_word(w)).shape


def ctype_of_permutation(w: Sequence[int]) -> Partition:
    """ctype(P(w)) through catabolism insertion on cc(w)."""
    return _ctype_of_permutation(make_permutation(w))


def column_subword(filling: Tableau, word: Sequence[int], j: int, r: int) -> Tuple[int, ...]:
    """
    Subword of ``word`` at the positions in column j, rows 1..r, of a
    recording filling, taken in increasing position order.

    Raises:
        InvalidTableauError: if column j or row r lies outside the filling
    """
    if not filling or not 1 <= j <= len(filling[0]):
        raise InvalidTableauError(f"column {j} outside the filling")
    height = sum(1 for row in filling if len(row) >= j)
    if not 1 <= r <= height:
        raise InvalidTableauError(f"row {r} outside column {j} of height {height}")
    positions = sorted(filling[row][j - 1] for row in range(r))
    return tuple(word[p - 1] for p in positions)


def row_consistency_holds(result: BlasiakResult) -> bool:
    """Every recorded box satisfies reads + cc letter = row."""
    return all(
        result.reads[p - 1] + result.word[p - 1] == r
        for r, row in enumerate(result.filling, start=1)
        for p in row
    )
