"""
Chains of Insertions
====================

Catabolism insertion that carries a third coordinate: a filling by index
pairs (k, i) whose shape starts at a lower bound for ctype and is pushed up
in dominance order until it reaches ctype(w).

Pairs are compared lexicographically, which is the order in which
catabolism insertion reads them: (k, i) is the k-th read of the letter at
position n - i + 1.

Components:
-----------
- modified_row_insert: single-row insertion that respects the row below
- build_seed_filling: row-wise sum of the fillings of shuffle components
- chains_run: the insertion loop with column deletion and reinsertion
- adjacent_swap_check: ctype rises under w_i + 1 < w_{i+1} swaps
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Set, Tuple, Union

from ..charge.words import cocharge_word, is_cocharge_word
from ..combinatorics.partitions import Partition, dominates
from ..combinatorics.tableaux import Tableau, shape
from ..permutations.stats import Permutation, make_permutation, swap_adjacent
from ..utils.errors import (
    ChainConditionError,
    InvalidPermutationError,
    InvalidTableauError,
    InvalidWordError,
)
from .blasiak import IndexPair, blasiak_insertion, blasiak_steps, ctype_of_permutation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Vacated:
    """Cell emptied by a column deletion; ``offset`` counts rows above the deleted pair."""
    offset: int


Cell = Union[IndexPair, _Vacated]
Grid = List[List[Cell]]


@dataclass(frozen=True)
class ChainStep:
    """A box addition during chains_run and the filling shape after it."""
    step: int
    position: int
    pair: IndexPair
    row: int
    moved: bool
    nu: Partition
    shape: Partition

    def to_dict(self) -> dict:
        return {
            "step": self.step,
            "position": self.position,
            "pair": list(self.pair),
            "row": self.row,
            "moved": self.moved,
            "nu": list(self.nu),
            "shape": list(self.shape),
        }


@dataclass(frozen=True)
class ChainsResult:
    shape: Partition
    filling: Tableau
    seed_shape: Partition
    trace: Tuple[ChainStep, ...]

    @property
    def shapes(self) -> Tuple[Partition, ...]:
        return (self.seed_shape,) + tuple(step.shape for step in self.trace)

    def is_dominance_chain(self) -> bool:
        shapes = self.shapes
        return all(dominates(b, a) for a, b in zip(shapes, shapes[1:]))


def _insert_into_row(grid: Grid, r: int, entry: IndexPair) -> Optional[IndexPair]:
    """Modified row insertion into 0-based row r of grid, in place."""
    row = grid[r]
    below = grid[r - 1] if r > 0 else None
    while True:
        slot = next(
            (
                c
                for c, cell in enumerate(row)
                if cell >= entry and (below is None or (c < len(below) and below[c] <= entry))
            ),
            None,
        )
        if slot is not None:
            row[slot], entry = entry, row[slot]
            continue
        end = len(row)
        if below is None or (end < len(below) and below[end] < entry):
            row.append(entry)
            return None
        return entry


def modified_row_insert(
    filling: Tableau, r: int, entry: IndexPair
) -> Tuple[Tableau, Optional[IndexPair]]:
    """
    Insert an index pair into row r of a filling without touching other rows.

    The leftmost cell at least ``entry`` whose lower neighbour is at most
    ``entry`` is replaced, and the displaced pair is inserted the same way.
    A pair that reaches the end of the row is appended when the row below
    supports the new cell; otherwise it pops out.

    Args:
        filling: Rows bottom to top, increasing in rows and columns
        r: 1-based row index
        entry: Pair to insert

    Returns:
        (new filling, popped pair or None)

    Raises:
        InvalidTableauError: if row r does not exist
    """
    if not 1 <= r <= len(filling):
        raise InvalidTableauError(f"row {r} is not a row of the filling")
    grid: Grid = [list(row) for row in filling]
    popped = _insert_into_row(grid, r - 1, tuple(entry))
    return tuple(tuple(row) for row in grid), popped


def build_seed_filling(word: Sequence[int], decomposition: Sequence[Iterable[int]]) -> Tableau:
    """
    Row-wise sum of the pair-indexed fillings of the shuffle components.

    Args:
        word: A cocharge word of length n
        decomposition: Blocks of 1-based positions partitioning 1..n; each
            block's subword must be a cocharge word

    Raises:
        InvalidWordError: if the blocks do not partition 1..n or a subword is
            not a cocharge word
    """
    word = tuple(int(x) for x in word)
    n = len(word)
    blocks = [sorted(int(p) for p in block) for block in decomposition]
    covered = sorted(p for block in blocks for p in block)
    if covered != list(range(1, n + 1)):
        raise InvalidWordError(f"blocks {blocks} do not partition positions 1..{n}")
    rows: List[List[IndexPair]] = []
    for block in blocks:
        subword = tuple(word[p - 1] for p in block)
        if not is_cocharge_word(subword):
            raise InvalidWordError(f"subword {subword} at positions {block} is not a cocharge word")
        component = blasiak_insertion(subword)
        for r, row in enumerate(component.filling):
            if r == len(rows):
                rows.append([])
            for local in row:
                global_position = block[local - 1]
                rows[r].append((component.reads[local - 1], n - global_position + 1))
    return tuple(tuple(sorted(row)) for row in rows)


def validate_chain_state(
    word: Sequence[int],
    nu: Sequence[int],
    filling: Tableau,
    reads: Sequence[int],
    deleted: Set[int],
    seed_shape: Optional[Partition] = None,
):
    """
    Check the six invariants of a chains state.

    Args:
        word: Cocharge word z being inserted
        nu: Current partition of catabolism insertion
        filling: Current pair filling
        reads: Reads so far per position (1-based position p at reads[p - 1])
        deleted: Positions already placed in nu
        seed_shape: Shape of the starting filling, for the dominance check

    Raises:
        ChainConditionError: naming the first violated condition
    """
    n = len(word)
    seconds = sorted(pair[1] for row in filling for pair in row)
    if seconds != list(range(1, n + 1)):
        raise ChainConditionError(1, f"second coordinates {seconds} are not 1..{n} once each")

    for r, row in enumerate(filling):
        if any(row[c] >= row[c + 1] for c in range(len(row) - 1)):
            raise ChainConditionError(2, f"row {r + 1} is not increasing: {row}")
        if r > 0:
            below = filling[r - 1]
            if len(row) > len(below):
                raise ChainConditionError(2, f"row {r + 1} is longer than row {r}")
            if any(below[c] >= row[c] for c in range(len(row))):
                raise ChainConditionError(2, f"a column is not increasing at row {r + 1}")

    if seed_shape is not None and not dominates(shape(filling), seed_shape):
        raise ChainConditionError(3, f"shape {shape(filling)} does not dominate {seed_shape}")

    for r, row in enumerate(filling, start=1):
        for c, (k, i) in enumerate(row):
            p = n - i + 1
            if k + word[p - 1] != r:
                raise ChainConditionError(4, f"({k},{i}) sits in row {r}, expected {k + word[p - 1]}")
            was_read = reads[p - 1] >= k
            in_nu = r <= len(nu) and c < nu[r - 1]
            if was_read != in_nu:
                raise ChainConditionError(
                    5, f"({k},{i}) read={was_read} but inside nu={in_nu}"
                )
            if was_read != (p in deleted):
                raise ChainConditionError(
                    6, f"({k},{i}) read={was_read} but position {p} deleted={p in deleted}"
                )


def _locate(grid: Grid, i: int) -> Tuple[int, int, IndexPair]:
    for r, row in enumerate(grid):
        for c, cell in enumerate(row):
            if cell is not None and cell[1] == i:
                return r, c, cell
    raise ChainConditionError(1, f"no entry with second coordinate {i}")


def _chain_step(grid: Grid, pair: IndexPair, r: int) -> Tuple[Grid, bool]:
    """
    Update the filling after reading ``pair`` placed a box in 0-based row r.
    Returns the new grid and whether entries were moved.
    """
    k, i = pair
    r_found, c, (m, _) = _locate(grid, i)
    if r_found == r:
        if m != k:
            raise ChainConditionError(4, f"({m},{i}) in row {r + 1} but read as ({k},{i})")
        return grid, False
    if r_found < r:
        raise ChainConditionError(6, f"unread ({m},{i}) lies below row {r + 1}")

    d = r_found - r
    segment: List[IndexPair] = []
    for t in range(r_found, len(grid)):
        if c >= len(grid[t]):
            break
        segment.append(grid[t][c])
        grid[t][c] = _Vacated(t - r_found)

    popped: List[IndexPair] = []

    def settle(cell: Cell) -> Optional[IndexPair]:
        # a vacated cell takes the pop from its offset, shifted up d rows; otherwise it closes
        if not isinstance(cell, _Vacated):
            return cell
        if cell.offset < len(popped):
            x, y = popped[cell.offset]
            return (x + d, y)
        return None

    for offset, (m_t, i_t) in enumerate(segment):
        row = grid[r + offset]
        vacated = next((q for q, cell in enumerate(row) if isinstance(cell, _Vacated)), None)
        if vacated is not None:
            settled = settle(row[vacated])
            if settled is None:
                del row[vacated]
            else:
                row[vacated] = settled
        out = _insert_into_row(grid, r + offset, (m_t - d, i_t))
        if out is not None:
            if len(popped) != offset:
                raise ChainConditionError(2, "insertions popped out of non-consecutive rows")
            popped.append(out)

    for t in range(r_found, len(grid)):
        grid[t] = sorted(cell for cell in map(settle, grid[t]) if cell is not None)
    while grid and not grid[-1]:
        grid.pop()
    return grid, True


def chains_run(word: Sequence[int], seed: Tableau, validate: bool = False) -> ChainsResult:
    """
    Run catabolism insertion on ``word`` while pushing the seed filling up.

    Args:
        word: A cocharge word
        seed: Pair filling satisfying the chains invariants with nu empty
        validate: Check all six invariants before the first step and after
            every step

    Returns:
        ChainsResult with final shape ctype, final filling and the trace

    Raises:
        InvalidWordError: if word is not a cocharge word
        ChainConditionError: if the seed or an intermediate state breaks an
            invariant
    """
    word = tuple(int(x) for x in word)
    if not is_cocharge_word(word):
        raise InvalidWordError(f"{word} is not a cocharge word")
    n = len(word)
    seed = tuple(tuple(tuple(pair) for pair in row) for row in seed)
    seed_shape = shape(seed)
    grid: Grid = [list(row) for row in seed]
    reads = [0] * n
    deleted: Set[int] = set()
    nu: List[int] = []
    trace: List[ChainStep] = []

    if validate:
        validate_chain_state(word, nu, seed, reads, deleted, seed_shape)

    for count, step in enumerate(blasiak_steps(word), start=1):
        reads[step.position - 1] = step.read
        if step.row is not None:
            if step.row > len(nu):
                nu.append(1)
            else:
                nu[step.row - 1] += 1
            deleted.add(step.position)
            pair = (step.read, n - step.position + 1)
            grid, moved = _chain_step(grid, pair, step.row - 1)
            current = tuple(len(row) for row in grid)
            trace.append(ChainStep(count, step.position, pair, step.row, moved, tuple(nu), current))
            if moved:
                logger.debug(f"step {count}: read {pair}, filling shape now {current}")
        if validate:
            state = tuple(tuple(row) for row in grid)
            try:
                validate_chain_state(word, nu, state, reads, deleted, seed_shape)
            except ChainConditionError as e:
                raise ChainConditionError(e.condition, e.detail, step=count) from e

    filling = tuple(tuple(row) for row in grid)
    final = shape(filling)
    if final != tuple(nu):
        raise ChainConditionError(5, f"final filling shape {final} differs from {tuple(nu)}")
    return ChainsResult(shape=final, filling=filling, seed_shape=seed_shape, trace=tuple(trace))


def _check_swap(w: Permutation, i: int):
    if not 1 <= i < len(w):
        raise InvalidPermutationError(f"position {i} out of range for length {len(w)}")
    if not w[i - 1] + 1 < w[i]:
        raise InvalidPermutationError(
            f"swap at {i} needs w_i + 1 < w_(i+1), got {w[i - 1]} and {w[i]}"
        )


def swap_seed_filling(w: Sequence[int], i: int) -> Tableau:
    """
    Pair-indexed insertion filling of cc(w) with the second coordinates
    n - i + 1 and n - i exchanged.
    """
    w = make_permutation(w)
    _check_swap(w, i)
    n = len(w)
    exchange = {n - i + 1: n - i, n - i: n - i + 1}
    filling = blasiak_insertion(cocharge_word(w)).pair_filling()
    return tuple(
        tuple((k, exchange.get(index, index)) for k, index in row) for row in filling
    )


def adjacent_swap_check(w: Sequence[int], i: int) -> Tuple[Permutation, bool]:
    """
    Swap positions i, i + 1 of w and test ctype(swapped) dominates ctype(w).

    Raises:
        InvalidPermutationError: unless w_i + 1 < w_{i+1}
    """
    w = make_permutation(w)
    _check_swap(w, i)
    swapped = swap_adjacent(w, i)
    return swapped, dominates(ctype_of_permutation(swapped), ctype_of_permutation(w))


def swap_chains_certificate(w: Sequence[int], i: int, validate: bool = True) -> ChainsResult:
    """Chains run on cc(swapped w) from the swapped insertion filling of w."""
    w = make_permutation(w)
    seed = swap_seed_filling(w, i)
    return chains_run(cocharge_word(swap_adjacent(w, i)), seed, validate=validate)
