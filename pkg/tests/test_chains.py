from itertools import combinations

import pytest

from chargebasis.catabolism import (
    adjacent_swap_check,
    blasiak_insertion,
    build_seed_filling,
    chains_run,
    ctype_of_permutation,
    modified_row_insert,
    swap_chains_certificate,
    swap_seed_filling,
    validate_chain_state,
)
from chargebasis.charge import cocharge_word
from chargebasis.combinatorics import dominates, partwise_sum, shape
from chargebasis.permutations import all_permutations, swap_adjacent
from chargebasis.utils import (
    ChainConditionError,
    InvalidPermutationError,
    InvalidTableauError,
    InvalidWordError,
)

Z = (1, 2, 0, 0, 1, 1, 2, 0, 1, 0)
BLUE = [1, 2, 3, 4, 6, 7]
RED = [5, 8, 9, 10]

SEED = (
    ((1, 1), (1, 3), (1, 7), (1, 8)),
    ((1, 2), (1, 6), (1, 10)),
    ((2, 5),),
    ((2, 9),),
    ((3, 4),),
)

FINAL = (
    ((1, 1), (1, 3), (1, 7), (1, 8)),
    ((1, 2), (1, 5), (1, 10)),
    ((1, 4), (1, 9), (2, 6)),
)


def two_word_shuffles(total):
    """Every z in a shuffle of two cocharge words, with its blocks and the summed lower bound."""
    words = {m: sorted({cocharge_word(w) for w in all_permutations(m)}) for m in range(1, total)}
    for m1 in range(1, total):
        for u1 in words[m1]:
            for u2 in words[total - m1]:
                lower = partwise_sum(blasiak_insertion(u1).shape, blasiak_insertion(u2).shape)
                for first in combinations(range(1, total + 1), m1):
                    second = [p for p in range(1, total + 1) if p not in first]
                    z = [0] * total
                    for p, letter in zip(first, u1):
                        z[p - 1] = letter
                    for p, letter in zip(second, u2):
                        z[p - 1] = letter
                    yield tuple(z), [list(first), second], lower


def assert_shuffles_reach_ctype(total):
    for z, blocks, lower in two_word_shuffles(total):
        result = chains_run(z, build_seed_filling(z, blocks), validate=True)
        assert result.shape == blasiak_insertion(z).shape, (z, blocks)
        assert result.filling == blasiak_insertion(z).pair_filling(), (z, blocks)
        assert dominates(result.shape, lower)
        assert result.is_dominance_chain()


def assert_swap_certificates(n):
    for w in all_permutations(n):
        for i in range(1, n):
            if w[i - 1] + 1 < w[i]:
                swapped, rises = adjacent_swap_check(w, i)
                assert rises
                certificate = swap_chains_certificate(w, i)
                assert certificate.shape == ctype_of_permutation(swapped), (w, i)
                assert certificate.is_dominance_chain()


class TestModifiedRowInsert:
    def test_pops_out_of_full_row(self):
        filling = (
            ((1, 1), (2, 5), (2, 7), (3, 8), (5, 2)),
            ((2, 4), (3, 2), (3, 3), (4, 1)),
        )
        new, popped = modified_row_insert(filling, 2, (2, 6))
        assert popped == (3, 3)
        assert new[1] == ((2, 4), (2, 6), (3, 2), (4, 1))
        assert new[0] == filling[0]

    def test_appends_when_supported(self):
        filling = (((1, 1), (2, 5), (2, 7)), ((2, 4), (3, 2)))
        new, popped = modified_row_insert(filling, 2, (2, 6))
        assert popped is None
        assert new[1] == ((2, 4), (2, 6), (3, 2))

    def test_large_entry_over_equal_rows_pops(self):
        filling = (((1, 1), (1, 2)), ((2, 1), (2, 2)))
        new, popped = modified_row_insert(filling, 2, (3, 1))
        assert popped == (3, 1)
        assert new == filling

    def test_bottom_row_always_accepts(self):
        new, popped = modified_row_insert((((1, 1), (1, 3)),), 1, (1, 2))
        assert popped is None
        assert new == (((1, 1), (1, 2), (1, 3)),)

    def test_missing_row(self):
        with pytest.raises(InvalidTableauError):
            modified_row_insert((((1, 1),),), 2, (1, 2))


class TestSeedFilling:
    def test_two_component_golden(self):
        assert build_seed_filling(Z, [BLUE, RED]) == SEED
        assert shape(SEED) == partwise_sum((2, 1, 1, 1, 1), (2, 2))

    def test_single_block_is_pair_filling(self):
        word = (2, 1, 1, 0, 0, 1)
        seed = build_seed_filling(word, [range(1, 7)])
        assert seed == blasiak_insertion(word).pair_filling()

    def test_blocks_must_partition_positions(self):
        with pytest.raises(InvalidWordError):
            build_seed_filling(Z, [BLUE, RED[:-1]])

    def test_blocks_must_be_cocharge_words(self):
        with pytest.raises(InvalidWordError):
            build_seed_filling((1, 0), [[1], [2]])


class TestChainsRun:
    def test_worked_trace(self):
        result = chains_run(Z, SEED, validate=True)
        assert result.shape == (4, 3, 3)
        assert result.filling == FINAL
        assert result.seed_shape == (4, 3, 1, 1, 1)
        assert result.is_dominance_chain()
        assert any(step.moved for step in result.trace)
        assert len(result.trace) == len(Z)

    def test_own_filling_never_moves(self):
        word = (2, 1, 1, 0, 0, 1)
        result = chains_run(word, blasiak_insertion(word).pair_filling(), validate=True)
        assert result.shape == (2, 2, 2)
        assert not any(step.moved for step in result.trace)

    def test_rejects_non_cocharge_word(self):
        with pytest.raises(InvalidWordError):
            chains_run((1,), (((1, 1),),))

    def test_bad_seed_names_condition(self):
        broken = (((1, 1), (1, 3)),) + SEED[1:]
        with pytest.raises(ChainConditionError) as info:
            chains_run(Z, broken, validate=True)
        assert info.value.condition == 1
        assert info.value.step is None

    def test_seed_in_wrong_row(self):
        # (1,2) belongs in row 2: position 1 carries the letter 1
        with pytest.raises(ChainConditionError) as info:
            validate_chain_state((1, 0), [], (((1, 1), (1, 2)),), [0, 0], set())
        assert info.value.condition == 4

    def test_vacated_cell_without_pop_is_reused(self):
        # (2,2) and (2,3) drop one row; nothing pops, so (1,3) takes the cell (2,2) left
        z = (1, 0, 2, 1, 0)
        seed = build_seed_filling(z, [[5], [1, 2, 3, 4]])
        assert seed == (((1, 1), (1, 4)), ((1, 5),), ((2, 2),), ((2, 3),))
        result = chains_run(z, seed, validate=True)
        assert result.shape == (2, 2, 1)
        assert result.filling == (((1, 1), (1, 4)), ((1, 2), (1, 5)), ((1, 3),))
        assert result.trace[1].moved
        assert result.trace[1].shape == (2, 2, 1)

    @pytest.mark.parametrize("total", range(2, 7))
    def test_shuffles_reach_ctype(self, total):
        assert_shuffles_reach_ctype(total)

    @pytest.mark.slow
    @pytest.mark.parametrize("total", [7, 8])
    def test_long_shuffles_reach_ctype(self, total):
        assert_shuffles_reach_ctype(total)


class TestAdjacentSwap:
    def test_golden(self):
        swapped, rises = adjacent_swap_check((1, 3, 2), 1)
        assert swapped == (3, 1, 2)
        assert rises

    @pytest.mark.parametrize("w, i", [((2, 4, 3, 1), 3), ((1, 3, 2, 4), 2), ((1, 2), 2)])
    def test_precondition(self, w, i):
        with pytest.raises(InvalidPermutationError):
            adjacent_swap_check(w, i)

    def test_swap_seed_exchanges_indices(self):
        w = (1, 3, 2)
        seed = swap_seed_filling(w, 1)
        plain = blasiak_insertion(cocharge_word(w)).pair_filling()
        swap = {3: 2, 2: 3}
        assert seed == tuple(tuple((k, swap.get(i, i)) for k, i in row) for row in plain)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_ctype_rises(self, n):
        for w in all_permutations(n):
            for i in range(1, n):
                if w[i - 1] + 1 < w[i]:
                    swapped, rises = adjacent_swap_check(w, i)
                    assert rises
                    assert swapped == swap_adjacent(w, i)

    @pytest.mark.parametrize("n", range(2, 6))
    def test_certificate_keeps_invariants(self, n):
        assert_swap_certificates(n)

    def test_certificate_reopens_cells(self):
        # 2413 -> 2431 from a single column seed
        seed = swap_seed_filling((2, 4, 1, 3), 3)
        assert seed == (((1, 1),), ((1, 4),), ((2, 2),), ((2, 3),))
        certificate = swap_chains_certificate((2, 4, 1, 3), 3)
        assert certificate.shape == (1, 1, 1, 1) == ctype_of_permutation((2, 4, 3, 1))
        assert certificate.filling == (((1, 1),), ((1, 2),), ((1, 3),), ((3, 4),))
        assert certificate.is_dominance_chain()

    @pytest.mark.slow
    @pytest.mark.parametrize("n", [6, 7])
    def test_certificate_keeps_invariants_slow(self, n):
        assert_swap_certificates(n)
