import pytest
from hypothesis import given, strategies as st

from chargebasis.combinatorics import q_factorial, shape
from chargebasis.combinatorics.tableaux import is_standard
from chargebasis.permutations import (
    all_permutations,
    descent_set,
    identity,
    inv,
    inv_generating_function,
    inverse,
    inversion_set,
    maj,
    maj_generating_function,
    make_permutation,
    reverse,
    rsk,
    rsk_inverse,
    swap_adjacent,
)
from chargebasis.utils import InvalidPermutationError, InvalidTableauError

permutations = st.integers(min_value=1, max_value=9).flatmap(
    lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
)


def test_make_permutation_rejects():
    with pytest.raises(InvalidPermutationError):
        make_permutation((1, 1, 2))
    with pytest.raises(InvalidPermutationError):
        make_permutation((0, 1))


def test_inverse_and_reverse():
    assert inverse(identity(4)) == identity(4)
    assert inverse((2, 1)) == (2, 1)
    assert inverse((2, 3, 1)) == (3, 1, 2)
    assert reverse((1, 2, 3)) == (3, 2, 1)


@given(permutations)
def test_inverse_is_an_involution(w):
    assert inverse(inverse(w)) == w
    assert reverse(reverse(w)) == w


def test_descents_and_major_index():
    assert descent_set((2, 4, 1, 3)) == frozenset({2})
    assert maj((2, 4, 1, 3)) == 2
    assert inversion_set((2, 4, 1, 3)) == frozenset({(1, 3), (2, 3), (2, 4)})
    assert inv((2, 4, 1, 3)) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_mahonian_identity(n):
    assert inv_generating_function(n) == maj_generating_function(n) == q_factorial(n)


def test_rsk_example():
    p, q = rsk((3, 5, 1, 6, 2, 4, 7))
    assert p == ((1, 2, 4, 7), (3, 5, 6))
    assert q == ((1, 2, 4, 7), (3, 5, 6))


@pytest.mark.parametrize("n", range(1, 6))
def test_rsk_is_a_bijection(n):
    seen = set()
    for w in all_permutations(n):
        p, q = rsk(w)
        assert shape(p) == shape(q)
        assert is_standard(p) and is_standard(q)
        assert rsk_inverse(p, q) == w
        seen.add((p, q))
    assert len(seen) == len(list(all_permutations(n)))


@given(permutations)
def test_rsk_inverse_roundtrip(w):
    assert rsk_inverse(*rsk(w)) == w


def test_rsk_of_inverse_swaps_tableaux():
    w = (3, 5, 1, 6, 2, 4, 7)
    p, q = rsk(w)
    assert rsk(inverse(w)) == (q, p)


def test_rsk_inverse_rejects_shape_mismatch():
    with pytest.raises(InvalidTableauError):
        rsk_inverse(((1, 2),), ((1,), (2,)))


def test_swap_adjacent():
    assert swap_adjacent((1, 3, 2), 1) == (3, 1, 2)
    with pytest.raises(InvalidPermutationError):
        swap_adjacent((1, 2), 2)
