"""
Jeu de Taquin
=============

Rectification of skew semistandard fillings by inward slides, in French
convention. An empty box slides toward the outside by taking the smaller of
its right and above neighbours; on a tie the above neighbour moves down.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ..utils.errors import InvalidTableauError
from .partitions import Partition
from .tableaux import Tableau, make_tableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SkewTableau:
    """
    Skew filling of outer/inner shape.

    ``inner[r]`` empty cells start row r; ``rows[r]`` holds the filled cells
    of row r from left to right, so row r spans columns inner[r] .. inner[r] +
    len(rows[r]) - 1. Rows are listed bottom to top.
    """
    inner: Partition
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def outer(self) -> Tuple[int, ...]:
        return tuple(self.inner_part(r) + len(row) for r, row in enumerate(self.rows))

    def inner_part(self, r: int) -> int:
        return self.inner[r] if r < len(self.inner) else 0

    def reading_word(self) -> Tuple[int, ...]:
        return tuple(e for row in reversed(self.rows) for e in row)

    def validate(self):
        """
        Raises:
            InvalidTableauError: if shapes are not partitions or the filling is
                not semistandard
        """
        if len(self.inner) > len(self.rows):
            raise InvalidTableauError("inner shape has more rows than the filling")
        if any(self.inner[i] < self.inner[i + 1] for i in range(len(self.inner) - 1)):
            raise InvalidTableauError(f"inner shape is not a partition: {self.inner}")
        outer = self.outer
        if any(outer[i] < outer[i + 1] for i in range(len(outer) - 1)):
            raise InvalidTableauError(f"outer shape is not a partition: {outer}")
        for r, row in enumerate(self.rows):
            if any(row[c] > row[c + 1] for c in range(len(row) - 1)):
                raise InvalidTableauError(f"row {r + 1} is not weakly increasing")
            if r == 0:
                continue
            start = self.inner_part(r)
            below_start = self.inner_part(r - 1)
            below = self.rows[r - 1]
            for offset, value in enumerate(row):
                column = start + offset
                if column >= below_start:
                    below_value = below[column - below_start]
                    if below_value >= value:
                        raise InvalidTableauError(
                            f"column {column + 1} does not strictly increase at row {r + 1}"
                        )


def skew_reading_word(skew: SkewTableau) -> Tuple[int, ...]:
    """
    Row words of a valid skew filling, top row first.

    Raises:
        InvalidTableauError: if the skew filling is invalid
    """
    skew.validate()
    return skew.reading_word()


def _inner_corner(grid: List[List[Optional[int]]]) -> Optional[Tuple[int, int]]:
    """Topmost empty cell with no empty cell to its right or above."""
    for r in range(len(grid) - 1, -1, -1):
        row = grid[r]
        empties = [c for c, value in enumerate(row) if value is None]
        if not empties:
            continue
        c = empties[-1]
        above_empty = r + 1 < len(grid) and c < len(grid[r + 1]) and grid[r + 1][c] is None
        if not above_empty:
            return r, c
    return None


def _slide(grid: List[List[Optional[int]]], r: int, c: int):
    """Slide the hole at (r, c) outward until it leaves the shape."""
    while True:
        right = grid[r][c + 1] if c + 1 < len(grid[r]) else None
        above = grid[r + 1][c] if r + 1 < len(grid) and c < len(grid[r + 1]) else None
        if right is None and above is None:
            grid[r].pop(c)
            break
        if above is not None and (right is None or above <= right):
            grid[r][c] = above
            grid[r + 1][c] = None
            r += 1
        else:
            grid[r][c] = right
            grid[r][c + 1] = None
            c += 1
    while grid and not grid[-1]:
        grid.pop()


def jdt_rectify(skew: SkewTableau) -> Tableau:
    """
    Rectify a skew semistandard filling to straight shape.

    Args:
        skew: A valid skew filling

    Returns:
        Straight-shape semistandard tableau, equal to P(reading word)

    Raises:
        InvalidTableauError: if the skew filling is invalid
    """
    skew.validate()
    grid: List[List[Optional[int]]] = [
        [None] * skew.inner_part(r) + list(row) for r, row in enumerate(skew.rows)
    ]
    slides = 0
    while True:
        corner = _inner_corner(grid)
        if corner is None:
            break
        _slide(grid, *corner)
        slides += 1
    logger.debug(f"rectified skew filling with {slides} slides")
    return make_tableau(grid)


def catabolism_skew(tableau: Tableau) -> SkewTableau:
    """
    Skew filling whose rectification is the catabolism of ``tableau``: the
    upper rows shifted right past the bottom row, which is placed on top.
    """
    if not tableau:
        return SkewTableau((), ())
    bottom, upper = tableau[0], tableau[1:]
    width = len(bottom)
    return SkewTableau(inner=(width,) * len(upper), rows=tuple(upper) + (tuple(bottom),))
