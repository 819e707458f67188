"""
Antisymmetric index sets for the Young subgroup S_gamma.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..charge.words import ExponentVector, charge_statistic, charge_word, descent_word
from ..combinatorics.enumeration import enumerate_syt
from ..combinatorics.partitions import Composition, make_composition, make_partition, partial_sums
from ..combinatorics.tableaux import Tableau, descent_set_tableau, shape
from ..permutations.rsk import rsk_inverse
from ..permutations.stats import Permutation, make_permutation
from ..utils.errors import InvalidPartitionError, InvalidPermutationError
from .builder import cc_shuffle_basis, qualifying_tableaux
from .monomials import reverse_shuffle_set

logger = logging.getLogger(__name__)


def _blocks(gamma: Composition) -> List[range]:
    """0-based index ranges of the gamma blocks."""
    ranges = []
    start = 0
    for part in gamma:
        ranges.append(range(start, start + part))
        start += part
    return ranges


def sort_gamma(w: Sequence[int], gamma: Sequence[int]) -> Permutation:
    """
    Sort each gamma block of w increasingly by adjacent swaps of
    w_i > w_{i+1} with w_i != w_{i+1} + 1. Charge labels of values are
    unchanged by such swaps.

    Raises:
        InvalidPermutationError: if a block repeats a charge label, or the
            sizes of w and gamma differ
    """
    w = make_permutation(w)
    gamma = make_composition(gamma)
    if sum(gamma) != len(w):
        raise InvalidPermutationError(f"|{gamma}| differs from the length of {w}")
    labels = charge_word(w)
    for block in _blocks(gamma):
        values = [labels[i] for i in block]
        if len(set(values)) != len(values):
            raise InvalidPermutationError(
                f"block {block.start + 1}..{block.stop} of {w} repeats a charge label"
            )
    letters = list(w)
    for block in _blocks(gamma):
        swapped = True
        while swapped:
            swapped = False
            for i in range(block.start, block.stop - 1):
                if letters[i] > letters[i + 1] and letters[i] != letters[i + 1] + 1:
                    letters[i], letters[i + 1] = letters[i + 1], letters[i]
                    swapped = True
    return tuple(letters)


@dataclass(frozen=True)
class AntisymEntry:
    w: Permutation
    p: Tableau
    q: Tableau
    charge: int

    @property
    def exponents(self) -> ExponentVector:
        return charge_word(self.w)

    def to_dict(self) -> dict:
        return {
            "w": list(self.w),
            "P": [list(row) for row in self.p],
            "Q": [list(row) for row in self.q],
            "charge": self.charge,
            "exponents": list(self.exponents),
        }


@dataclass(frozen=True)
class AntisymIndexSet:
    mu: Tuple[int, ...]
    gamma: Tuple[int, ...]
    entries: Tuple[AntisymEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def permutations(self) -> Tuple[Permutation, ...]:
        return tuple(entry.w for entry in self.entries)

    def monomials(self) -> frozenset:
        return frozenset(entry.exponents for entry in self.entries)

    def to_dict(self) -> dict:
        return {
            "mu": list(self.mu),
            "gamma": list(self.gamma),
            "size": len(self),
            "entries": [entry.to_dict() for entry in self.entries],
        }


def antisym_index_set(mu: Sequence[int], gamma: Sequence[int]) -> AntisymIndexSet:
    """
    All w with ctype(P(w)^t) dominating mu^t and des(Q(w)) inside the
    partial sums of gamma, sorted lexicographically.

    Raises:
        InvalidPartitionError: if |mu| != |gamma|
    """
    mu = make_partition(mu)
    gamma = make_composition(gamma)
    if sum(mu) != sum(gamma):
        raise InvalidPartitionError(f"|{mu}| != |{gamma}|")
    allowed = partial_sums(gamma)
    entries = []
    for p in qualifying_tableaux(mu):
        for q in enumerate_syt(shape(p)):
            if descent_set_tableau(q) <= allowed:
                w = rsk_inverse(p, q)
                entries.append(AntisymEntry(w=w, p=p, q=q, charge=charge_statistic(w)))
    entries.sort(key=lambda entry: entry.w)
    logger.debug(f"antisymmetric index set for mu={mu}, gamma={gamma}: {len(entries)} entries")
    return AntisymIndexSet(mu=mu, gamma=gamma, entries=tuple(entries))


def in_reverse_young_shuffle(sigma: Sequence[int], gamma: Sequence[int]) -> bool:
    """Whether each block {g_{j-1}+1, ..., g_j} of values appears in decreasing order."""
    position = {value: i for i, value in enumerate(sigma)}
    start = 1
    for part in gamma:
        values = range(start, start + part)
        if any(position[v] < position[v + 1] for v in values[:-1]):
            return False
        start += part
    return True


def cc_antisym_index_set(mu: Sequence[int], gamma: Sequence[int]) -> Tuple[Permutation, ...]:
    """
    Permutations sigma whose value blocks of gamma appear in decreasing
    order and whose descent word g_sigma lies in D_mu.

    The candidates are the reverse shuffles of the value blocks, in
    lexicographic order.
    """
    mu = make_partition(mu)
    gamma = make_composition(gamma)
    if sum(mu) != sum(gamma):
        raise InvalidPartitionError(f"|{mu}| != |{gamma}|")
    shuffles = cc_shuffle_basis(mu)
    blocks = [tuple(range(block.start + 1, block.stop + 1)) for block in _blocks(gamma)]
    return tuple(
        sigma for sigma in sorted(reverse_shuffle_set(*blocks))
        if descent_word(sigma) in shuffles
    )
