"""
Permutation Statistics
======================

One-line permutations as tuples of 1..n. Descents, major index, inversions
and the q-counting identities they satisfy.
"""

from itertools import permutations as _permutations
from typing import FrozenSet, Iterator, Sequence, Tuple

from ..combinatorics.qseries import QPolynomial
from ..utils.errors import InvalidPermutationError

Permutation = Tuple[int, ...]


def make_permutation(letters: Sequence[int]) -> Permutation:
    """
    Raises:
        InvalidPermutationError: unless letters are exactly 1..n once each
    """
    w = tuple(int(x) for x in letters)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidPermutationError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def is_permutation(letters: Sequence[int]) -> bool:
    return sorted(letters) == list(range(1, len(letters) + 1))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order."""
    return _permutations(range(1, n + 1))


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def inverse(w: Permutation) -> Permutation:
    result = [0] * len(w)
    for position, value in enumerate(w, start=1):
        result[value - 1] = position
    return tuple(result)


def reverse(w: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(w))


def descent_set(w: Sequence[int]) -> FrozenSet[int]:
    """{i : w_i > w_{i+1}}, 1-based."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def maj(w: Sequence[int]) -> int:
    return sum(descent_set(w))


def inversion_set(w: Sequence[int]) -> FrozenSet[Tuple[int, int]]:
    """Position pairs (i, j), i < j, with w_i > w_j."""
    n = len(w)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inv(w: Sequence[int]) -> int:
    return len(inversion_set(w))


def maj_generating_function(n: int) -> QPolynomial:
    return QPolynomial.from_degrees(maj(w) for w in all_permutations(n))


def inv_generating_function(n: int) -> QPolynomial:
    return QPolynomial.from_degrees(inv(w) for w in all_permutations(n))


def swap_adjacent(w: Permutation, i: int) -> Permutation:
    """Swap positions i and i+1 (1-based)."""
    if not 1 <= i < len(w):
        raise InvalidPermutationError(f"position {i} out of range for length {len(w)}")
    letters = list(w)
    letters[i - 1], letters[i] = letters[i], letters[i - 1]
    return tuple(letters)
