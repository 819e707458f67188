"""
Catabolism
==========

Catabolism K(T), m-catabolism Cat_m(T) and the catabolizability type of a
standard tableau, computed two ways: iterating K and reading off the
increments of d, or iterating maximal m-catabolisms.
"""

import logging
from typing import List, Sequence

from cachetools import cached, LRUCache

from ..combinatorics.jdt import catabolism_skew, jdt_rectify
from ..combinatorics.partitions import Partition, dominates, make_partition
from ..combinatorics.tableaux import Tableau, entries, reading_word, require_standard
from ..permutations.rsk import insertion_tableau
from ..utils.errors import InvalidTableauError
from ..utils.locks import cache_lock

logger = logging.getLogger(__name__)


def d_statistic(tableau: Tableau) -> int:
    """Largest m such that the bottom row holds the m smallest entries."""
    if not tableau:
        return 0
    smallest = sorted(entries(tableau))
    bottom = tableau[0]
    m = 0
    while m < len(bottom) and bottom[m] == smallest[m]:
        m += 1
    return m


def catabolize(tableau: Tableau) -> Tableau:
    """
    K(T) = P(w' w) where rw(T) = w w' and w' is the bottom row.

    Raises:
        InvalidTableauError: if T is not standard
    """
    require_standard(tableau)
    if len(tableau) <= 1:
        return tableau
    upper = reading_word(tableau[1:])
    return insertion_tableau(tuple(tableau[0]) + upper)


def catabolize_jdt(tableau: Tableau) -> Tableau:
    """K(T) by sliding the bottom row off to the upper left and rectifying."""
    require_standard(tableau)
    if len(tableau) <= 1:
        return tableau
    return jdt_rectify(catabolism_skew(tableau))


def m_catabolize(tableau: Tableau, m: int) -> Tableau:
    """
    Cat_m(T): drop the first m entries of the bottom row, then insert the
    rest of the bottom row followed by the reading word of the upper rows.

    Raises:
        InvalidTableauError: unless the bottom row holds the m smallest entries
    """
    if m < 0 or (tableau and m > len(tableau[0])) or (not tableau and m > 0):
        raise InvalidTableauError(f"cannot remove {m} entries from the bottom row")
    if m > d_statistic(tableau):
        raise InvalidTableauError(
            f"bottom row does not contain the {m} smallest entries of {tableau}"
        )
    if not tableau:
        return ()
    rest = tuple(tableau[0][m:])
    return insertion_tableau(rest + reading_word(tableau[1:]))


@cached(cache=LRUCache(maxsize=8192), lock=cache_lock)
def ctype_direct(tableau: Tableau) -> Partition:
    """
    Catabolizability type from d(T), d(K(T)) - d(T), d(K^2(T)) - d(K(T)), ...

    Raises:
        InvalidTableauError: if T is not standard or d stops increasing
    """
    require_standard(tableau)
    n = len(entries(tableau))
    parts: List[int] = []
    current = tableau
    previous = 0
    while previous < n:
        d = d_statistic(current)
        if d <= previous:
            raise InvalidTableauError(f"catabolism stalled at d = {d} for {tableau}")
        parts.append(d - previous)
        previous = d
        if d < n:
            current = catabolize(current)
    return tuple(parts)


def ctype_by_m_catabolism(tableau: Tableau) -> Partition:
    """Catabolizability type by iterating maximal m-catabolisms."""
    require_standard(tableau)
    parts: List[int] = []
    current = tableau
    while current:
        m = d_statistic(current)
        parts.append(m)
        current = m_catabolize(current, m)
    return tuple(parts)


def ctype(tableau: Tableau) -> Partition:
    return ctype_direct(tableau)


def is_catabolizable(tableau: Tableau, lam: Sequence[int]) -> bool:
    """
    Whether T is lam-catabolizable: the bottom row holds the lam_1 smallest
    entries and Cat_{lam_1}(T) is (lam_2, lam_3, ...)-catabolizable.
    """
    require_standard(tableau)
    lam = make_partition(lam)
    if sum(lam) != len(entries(tableau)):
        raise InvalidTableauError(f"|{lam}| differs from the size of {tableau}")
    current = tableau
    for part in lam:
        if d_statistic(current) < part:
            return False
        current = m_catabolize(current, part)
    return True


def has_ctype_at_least(tableau: Tableau, mu: Sequence[int]) -> bool:
    """ctype(T) dominates mu."""
    return dominates(ctype_direct(tableau), mu)
