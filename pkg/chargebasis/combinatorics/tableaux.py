"""
Young Tableaux
==============

Tableaux in French convention: ``rows[0]`` is the bottom row and rows are
listed bottom to top. A tableau is a tuple of row tuples; entries are
positive integers or, inside the chains algorithm, index pairs.
"""

from typing import Any, Dict, FrozenSet, Sequence, Tuple

from ..utils.errors import InvalidTableauError
from .partitions import Partition

Tableau = Tuple[Tuple[Any, ...], ...]
Word = Tuple[int, ...]


def make_tableau(rows: Sequence[Sequence[Any]]) -> Tableau:
    """
    Build a tableau from rows listed bottom to top.

    Raises:
        InvalidTableauError: if row lengths are not weakly decreasing
    """
    trimmed = [tuple(row) for row in rows]
    while trimmed and not trimmed[-1]:
        trimmed.pop()
    tableau = tuple(trimmed)
    lengths = [len(row) for row in tableau]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        raise InvalidTableauError(f"row lengths must weakly decrease bottom to top: {lengths}")
    return tableau


def shape(tableau: Tableau) -> Partition:
    return tuple(len(row) for row in tableau)


def size(tableau: Tableau) -> int:
    return sum(len(row) for row in tableau)


def entries(tableau: Tableau) -> Tuple[Any, ...]:
    return tuple(entry for row in tableau for entry in row)


def reading_word(tableau: Tableau) -> Word:
    """Concatenate the rows from the top row down to the bottom row."""
    return tuple(entry for row in reversed(tableau) for entry in row)


def transpose_tableau(tableau: Tableau) -> Tableau:
    """Swap rows and columns: the entry at (r, c) moves to (c, r)."""
    if not tableau:
        return ()
    width = len(tableau[0])
    return tuple(
        tuple(row[c] for row in tableau if len(row) > c)
        for c in range(width)
    )


def is_semistandard(tableau: Tableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase upward."""
    for r, row in enumerate(tableau):
        if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
            return False
        if r > 0:
            below = tableau[r - 1]
            if len(row) > len(below) or any(below[c] >= row[c] for c in range(len(row))):
                return False
    return True


def is_standard(tableau: Tableau) -> bool:
    """Semistandard with entries exactly 1..n."""
    values = sorted(entries(tableau))
    return values == list(range(1, len(values) + 1)) and is_semistandard(tableau)


def require_standard(tableau: Tableau):
    if not is_standard(tableau):
        raise InvalidTableauError(f"not a standard Young tableau: {tableau}")


def entry_rows(tableau: Tableau) -> Dict[Any, int]:
    """Map each entry to its 1-based row counted from the bottom."""
    return {entry: r + 1 for r, row in enumerate(tableau) for entry in row}


def descent_set_tableau(tableau: Tableau) -> FrozenSet[int]:
    """
    Descents of a standard tableau: i such that i+1 lies in a higher row.

    Raises:
        InvalidTableauError: if the tableau is not standard
    """
    require_standard(tableau)
    rows = entry_rows(tableau)
    n = len(rows)
    return frozenset(i for i in range(1, n) if rows[i] < rows[i + 1])


def weight(tableau: Tableau) -> Tuple[int, ...]:
    """Content vector: number of 1s, 2s, ... up to the largest entry."""
    values = entries(tableau)
    if not values:
        return ()
    return tuple(values.count(v) for v in range(1, max(values) + 1))


def tableau_to_json(tableau: Tableau) -> list:
    """Array of arrays, bottom row first; pair entries become 2-element arrays."""
    return [[list(e) if isinstance(e, tuple) else e for e in row] for row in tableau]
