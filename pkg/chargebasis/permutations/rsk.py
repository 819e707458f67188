"""
RSK Correspondence
==================

Row insertion Robinson-Schensted-Knuth in French convention. The bottom row
receives each new letter and bumped letters move one row up.
"""

from typing import List, Sequence, Tuple

from ..combinatorics.tableaux import Tableau, shape, is_standard
from ..utils.errors import InvalidTableauError
from .stats import Permutation, make_permutation


def _row_insert(rows: List[List[int]], x: int) -> int:
    """Insert x by row bumping; returns the 0-based row where a box was added."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r
        row = rows[r]
        for c, value in enumerate(row):
            if value > x:
                row[c], x = x, value
                break
        else:
            row.append(x)
            return r
        r += 1


def insertion_tableau(word: Sequence[int]) -> Tableau:
    """P(word) for any word of positive integers."""
    rows: List[List[int]] = []
    for x in word:
        _row_insert(rows, x)
    return tuple(tuple(row) for row in rows)


def rsk(w: Sequence[int]) -> Tuple[Tableau, Tableau]:
    """
    Insertion and recording tableaux of a permutation.

    Args:
        w: Permutation in one-line notation

    Returns:
        (P, Q), standard tableaux of equal shape
    """
    w = make_permutation(w)
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for step, x in enumerate(w, start=1):
        r = _row_insert(p_rows, x)
        if r == len(q_rows):
            q_rows.append([step])
        else:
            q_rows[r].append(step)
    return tuple(tuple(row) for row in p_rows), tuple(tuple(row) for row in q_rows)


def rsk_inverse(p: Tableau, q: Tableau) -> Permutation:
    """
    Recover w from (P(w), Q(w)).

    Raises:
        InvalidTableauError: if the shapes differ or either tableau is not standard
    """
    if shape(p) != shape(q):
        raise InvalidTableauError(f"shape mismatch: {shape(p)} vs {shape(q)}")
    if not (is_standard(p) and is_standard(q)):
        raise InvalidTableauError("rsk_inverse needs standard tableaux")
    p_rows = [list(row) for row in p]
    q_positions = {value: r for r, row in enumerate(q) for value in row}
    n = len(q_positions)
    word = [0] * n
    for step in range(n, 0, -1):
        r = q_positions[step]
        x = p_rows[r].pop()
        if not p_rows[r]:
            p_rows.pop()
        for below in range(r - 1, -1, -1):
            row = p_rows[below]
            c = max(i for i, value in enumerate(row) if value < x)
            row[c], x = x, row[c]
        word[step - 1] = x
    return tuple(word)
