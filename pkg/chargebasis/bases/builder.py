"""
Basis Builder
=============

The charge monomial set C_mu, the shuffle set D_mu and the box-moving
witness that places every charge word of C_mu inside D_mu.

C_mu collects cw(w) over all w whose insertion tableau P satisfies
ctype(P^t) >= mu^t. Words are grouped by P: every standard tableau Q of
the same shape gives one w = RSK^-1(P, Q).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import FrozenSet, List, Sequence, Tuple

from cachetools import cached, LRUCache

from ..catabolism.blasiak import blasiak_insertion
from ..catabolism.catabolism import has_ctype_at_least
from ..charge.words import ExponentVector, charge_word, cocharge_word, is_cocharge_word, tableau_cocharge
from ..combinatorics.enumeration import enumerate_all_syt, enumerate_syt
from ..combinatorics.partitions import Partition, dominates, make_partition, padded, transpose
from ..combinatorics.qseries import QPolynomial, ZERO
from ..combinatorics.tableaux import Tableau, shape, transpose_tableau
from ..permutations.rsk import insertion_tableau, rsk_inverse
from ..permutations.stats import Permutation, make_permutation, reverse
from ..utils.errors import InvalidWordError
from ..utils.locks import cache_lock
from .monomials import MonomialSet, descent_basis, shuffle_set

logger = logging.getLogger(__name__)


def qualifying_tableaux(mu: Sequence[int]) -> Tuple[Tableau, ...]:
    """Standard tableaux S of size |mu| with ctype(S^t) dominating mu^t."""
    mu = make_partition(mu)
    target = transpose(mu)
    return tuple(
        s for s in enumerate_all_syt(sum(mu))
        if has_ctype_at_least(transpose_tableau(s), target)
    )


def _charge_words_for(p: Tableau) -> List[ExponentVector]:
    return [charge_word(rsk_inverse(p, q)) for q in enumerate_syt(shape(p))]


def charge_basis(mu: Sequence[int], workers: int = 1) -> MonomialSet:
    """
    C_mu = {cw(w) : ctype(P(w)^t) dominates mu^t}.

    Args:
        mu: Partition of n
        workers: Thread count for the per-tableau enumeration

    Returns:
        MonomialSet tagged "charge"
    """
    mu = make_partition(mu)
    n = sum(mu)
    tableaux = qualifying_tableaux(mu)
    if workers > 1 and len(tableaux) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            groups = list(executor.map(_charge_words_for, tableaux))
    else:
        groups = [_charge_words_for(p) for p in tableaux]
    vectors = [v for group in groups for v in group]
    basis = MonomialSet.from_vectors(n, "charge", vectors)
    if len(basis) != len(vectors):
        logger.warning(f"C_{mu}: {len(vectors)} charge words collapsed to {len(basis)} vectors")
    logger.debug(f"C_{mu}: {len(basis)} monomials from {len(tableaux)} insertion tableaux")
    return basis


def in_charge_basis(w: Sequence[int], mu: Sequence[int]) -> bool:
    """Whether w contributes to C_mu, i.e. ctype(P(w)^t) dominates mu^t."""
    p = insertion_tableau(make_permutation(w))
    return has_ctype_at_least(transpose_tableau(p), transpose(make_partition(mu)))


@cached(cache=LRUCache(maxsize=256), lock=cache_lock)
def _shuffle_vectors(mu: Partition) -> FrozenSet[ExponentVector]:
    current: FrozenSet[Tuple[int, ...]] = frozenset(((),))
    for part in mu:
        components = descent_basis(part).members
        current = frozenset(
            u for partial in current for z in components for u in shuffle_set(partial, z)
        )
    return current


def cc_shuffle_basis(mu: Sequence[int]) -> MonomialSet:
    """
    D_mu: all shuffles of tuples (z_1, ..., z_l) with z_j a descent word of
    length mu_j, deduplicated.
    """
    mu = make_partition(mu)
    return MonomialSet.from_vectors(sum(mu), "shuffle", _shuffle_vectors(mu))


@dataclass(frozen=True)
class ShuffleWitness:
    """
    A decomposition of cw(w) into descent words of lengths mu_1, mu_2, ...

    ``blocks[j]`` are the 1-based positions of cw(w) carrying component j.
    """
    w: Permutation
    mu: Partition
    blocks: Tuple[Tuple[int, ...], ...]
    components: Tuple[Tuple[int, ...], ...]

    def is_valid(self) -> bool:
        word = charge_word(self.w)
        if tuple(len(block) for block in self.blocks) != self.mu:
            return False
        for block, component in zip(self.blocks, self.components):
            if tuple(word[p - 1] for p in block) != component:
                return False
            if not is_cocharge_word(tuple(reversed(component))):
                return False
        return sorted(p for block in self.blocks for p in block) == list(range(1, len(word) + 1))

    def to_dict(self) -> dict:
        return {
            "w": list(self.w),
            "mu": list(self.mu),
            "blocks": [list(block) for block in self.blocks],
            "components": [list(component) for component in self.components],
        }


def shuffle_witness(w: Sequence[int], mu: Sequence[int]) -> ShuffleWitness:
    """
    Exhibit cw(w) as a shuffle of descent words of lengths mu_1, mu_2, ...

    Starts from the insertion filling of cc(rev(w)), whose column heights
    are some lam dominated by mu, and repeatedly moves the top box of the
    first column j2 after the first deficient column j1 with matching
    prefix sums onto column j1.

    Raises:
        InvalidWordError: if ctype(P(w)^t) does not dominate mu^t, or a
            column word stops being a cocharge word
    """
    w = make_permutation(w)
    mu = make_partition(mu)
    n = len(w)
    if sum(mu) != n:
        raise InvalidWordError(f"|{mu}| differs from the length of {w}")
    z = cocharge_word(reverse(w))
    filling = blasiak_insertion(z).filling
    width = len(filling[0]) if filling else 0
    columns: List[List[int]] = [
        [row[j] for row in filling if len(row) > j] for j in range(width)
    ]
    heights = [len(column) for column in columns]
    length = max(len(heights), len(mu))
    target = padded(mu, length)
    heights = list(padded(heights, length))
    columns += [[] for _ in range(length - len(columns))]
    if not dominates(target, heights):
        raise InvalidWordError(f"ctype(P({w})^t) does not dominate {transpose(mu)}")

    moves = 0
    while heights != list(target):
        j1 = next(j for j in range(length) if heights[j] != target[j])
        prefix_h = sum(heights[: j1 + 1])
        prefix_t = sum(target[: j1 + 1])
        j2 = None
        for j in range(j1 + 1, length):
            prefix_h += heights[j]
            prefix_t += target[j]
            if prefix_h == prefix_t:
                j2 = j
                break
        if j2 is None:
            raise InvalidWordError(f"no donor column for column {j1 + 1} of {w}")
        columns[j1].append(columns[j2].pop())
        heights[j1] += 1
        heights[j2] -= 1
        moves += 1

    blocks = []
    components = []
    for j, column in enumerate(columns[: len(mu)]):
        positions = sorted(column)
        subword = tuple(z[p - 1] for p in positions)
        if not is_cocharge_word(subword):
            raise InvalidWordError(f"column {j + 1} word {subword} is not a cocharge word")
        blocks.append(tuple(sorted(n - p + 1 for p in positions)))
        components.append(tuple(reversed(subword)))
    logger.debug(f"shuffle witness for {w} into {mu} after {moves} box moves")
    return ShuffleWitness(w=w, mu=mu, blocks=tuple(blocks), components=tuple(components))


def hilbert_series_cocharge(mu: Sequence[int]) -> QPolynomial:
    """Sum over SYT T with ctype(T) dominating mu of q^cocharge(T) |SYT(shape T)|."""
    mu = make_partition(mu)
    total = ZERO
    for t in enumerate_all_syt(sum(mu)):
        if has_ctype_at_least(t, mu):
            total = total + QPolynomial.monomial(tableau_cocharge(t), len(enumerate_syt(shape(t))))
    return total
