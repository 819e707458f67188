"""
Monomial Sets
=============

Exponent-vector sets with provenance, the Artin and descent bases of the
coinvariant ring, word shuffles and the descent order.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from itertools import product
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from cachetools import cached, LRUCache

from ..charge.words import ExponentVector, descent_word, format_monomial
from ..combinatorics.qseries import QPolynomial
from ..permutations.stats import Permutation, all_permutations, make_permutation
from ..utils.errors import InvalidWordError
from ..utils.locks import cache_lock

Word = Tuple[int, ...]

PROVENANCES = ("charge", "shuffle", "descent", "artin")


def descent_key(alpha: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Sort key for the descent order: (sorted decreasing, the vector itself)."""
    return tuple(sorted(alpha, reverse=True)), tuple(alpha)


def descent_compare(alpha: Sequence[int], beta: Sequence[int]) -> int:
    """
    Compare two exponent vectors in descent order.

    Returns:
        -1, 0 or 1 as alpha is below, equal to or above beta

    Raises:
        InvalidWordError: if the lengths differ
    """
    if len(alpha) != len(beta):
        raise InvalidWordError(f"cannot compare vectors of lengths {len(alpha)} and {len(beta)}")
    a, b = descent_key(alpha), descent_key(beta)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class MonomialSet:
    """
    A set of exponent vectors of a fixed length n, tagged with where it
    came from.
    """
    n: int
    provenance: str
    members: FrozenSet[ExponentVector]

    @classmethod
    def from_vectors(cls, n: int, provenance: str, vectors: Iterable[Sequence[int]]) -> "MonomialSet":
        members = frozenset(tuple(v) for v in vectors)
        if any(len(v) != n for v in members):
            raise InvalidWordError(f"every exponent vector must have length {n}")
        return cls(n=n, provenance=provenance, members=members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, vector) -> bool:
        return tuple(vector) in self.members

    def __iter__(self):
        return iter(self.ordered())

    def ordered(self) -> List[ExponentVector]:
        """Members from largest to smallest in descent order."""
        return sorted(self.members, key=descent_key, reverse=True)

    def degree_histogram(self) -> List[int]:
        return self.hilbert_series().to_list()

    def hilbert_series(self) -> QPolynomial:
        return hilbert_series(self)

    def issubset(self, other: "MonomialSet") -> bool:
        return self.members <= other.members

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "provenance": self.provenance,
            "size": len(self),
            "degree_histogram": self.degree_histogram(),
            "monomials": [
                {"exponents": list(v), "monomial": format_monomial(v), "degree": sum(v)}
                for v in self.ordered()
            ],
        }


def hilbert_series(monomials: Iterable[Sequence[int]]) -> QPolynomial:
    """Sum of q^degree over a set of exponent vectors."""
    vectors = monomials.members if isinstance(monomials, MonomialSet) else monomials
    return QPolynomial.from_degrees(sum(v) for v in vectors)


def artin_monomial(sigma: Sequence[int]) -> ExponentVector:
    """Exponents of the product of x_{sigma_i} over inversions i < j, sigma_i > sigma_j."""
    sigma = make_permutation(sigma)
    n = len(sigma)
    exponents = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                exponents[sigma[i] - 1] += 1
    return tuple(exponents)


def artin_basis(n: int) -> MonomialSet:
    """All exponent vectors with a_i < i."""
    return MonomialSet.from_vectors(n, "artin", product(*(range(i) for i in range(1, n + 1))))


@cached(cache=LRUCache(maxsize=16), lock=cache_lock)
def descent_basis(n: int) -> MonomialSet:
    """Exponents of the Garsia-Stanton descent monomials g_w, w in S_n."""
    return MonomialSet.from_vectors(n, "descent", (descent_word(w) for w in all_permutations(n)))


@cached(cache=LRUCache(maxsize=4096), lock=cache_lock)
def _shuffle_pair(a: Word, b: Word) -> FrozenSet[Word]:
    if not a:
        return frozenset((b,))
    if not b:
        return frozenset((a,))
    head_a = {(a[0],) + rest for rest in _shuffle_pair(a[1:], b)}
    head_b = {(b[0],) + rest for rest in _shuffle_pair(a, b[1:])}
    return frozenset(head_a | head_b)


def shuffle_set(*words: Sequence[int]) -> FrozenSet[Word]:
    """All distinct interleavings of the given words."""
    result: FrozenSet[Word] = frozenset(((),))
    for word in words:
        word = tuple(word)
        result = frozenset(u for partial in result for u in _shuffle_pair(partial, word))
    return result


def reverse_shuffle_set(*words: Sequence[int]) -> FrozenSet[Word]:
    """Shuffles of the reversed words."""
    return shuffle_set(*(tuple(reversed(word)) for word in words))


def sorted_by_descent_order(vectors: Iterable[Sequence[int]]) -> List[ExponentVector]:
    return sorted((tuple(v) for v in vectors), key=cmp_to_key(descent_compare))
