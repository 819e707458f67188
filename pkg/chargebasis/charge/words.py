"""
Charge and Cocharge Words
=========================

Per-letter charge labels of permutations, the classification of cocharge
words, descent words and charge monomials.

cc(w) labels the letter 1 with 0 and gives i+1 the label of i, plus one
when i+1 sits to the left of i. cw(w) = rev(cc(rev(w))) instead increments
when i+1 sits to the right. Both words are indexed by position in w.
"""

from math import comb
from typing import Sequence, Tuple

from ..combinatorics.tableaux import Tableau, reading_word
from ..permutations.stats import Permutation, make_permutation, inverse, reverse
from ..utils.errors import InvalidWordError

Word = Tuple[int, ...]
ExponentVector = Tuple[int, ...]


def _labels(w: Permutation, step_when_left: bool) -> Word:
    position = inverse(w)
    n = len(w)
    label_of_value = [0] * (n + 1)
    for value in range(2, n + 1):
        is_left = position[value - 1] < position[value - 2]
        label_of_value[value] = label_of_value[value - 1] + (1 if is_left == step_when_left else 0)
    return tuple(label_of_value[value] for value in w)


def cocharge_word(w: Sequence[int]) -> Word:
    """cc(w); e.g. 3516247 -> 1202012."""
    return _labels(make_permutation(w), step_when_left=True)


def charge_word(w: Sequence[int]) -> Word:
    """cw(w) = rev(cc(rev(w))); e.g. 7426153 -> 2102021."""
    return _labels(make_permutation(w), step_when_left=False)


def cocharge_statistic(w: Sequence[int]) -> int:
    return sum(cocharge_word(w))


def charge_statistic(w: Sequence[int]) -> int:
    return sum(charge_word(w))


def tableau_charge(tableau: Tableau) -> int:
    """Charge of a standard tableau: charge of its reading word."""
    return charge_statistic(reading_word(tableau))


def tableau_cocharge(tableau: Tableau) -> int:
    return cocharge_statistic(reading_word(tableau))


def is_cocharge_word(z: Sequence[int]) -> bool:
    """
    Classification of cocharge words.

    z is cc(w) for some permutation w iff z contains a 0 and every letter
    z_i either repeats somewhere to its right, has z_i + 1 somewhere to its
    left, or is the maximum letter.
    """
    z = tuple(z)
    if 0 not in z or any(letter < 0 for letter in z):
        return False
    top = max(z)
    for i, letter in enumerate(z):
        if letter == top:
            continue
        if letter in z[i + 1:]:
            continue
        if letter + 1 in z[:i]:
            continue
        return False
    return True


def cocharge_word_inverse(z: Sequence[int]) -> Permutation:
    """
    The permutation with cocharge word z whose letters of each label fill in
    increasing order left to right, after all letters of smaller labels.

    Raises:
        InvalidWordError: if z is not a cocharge word
    """
    z = tuple(z)
    if not is_cocharge_word(z):
        raise InvalidWordError(f"not a cocharge word: {z}")
    w = [0] * len(z)
    value = 1
    for label in range(max(z) + 1):
        for position, letter in enumerate(z):
            if letter == label:
                w[position] = value
                value += 1
    return tuple(w)


def descent_word(w: Sequence[int]) -> ExponentVector:
    """Exponents of g_w: x_j counts the descents i of w with j among w_1..w_i."""
    w = make_permutation(w)
    n = len(w)
    exponents = [0] * n
    for i in range(1, n):
        if w[i - 1] > w[i]:
            for value in w[:i]:
                exponents[value - 1] += 1
    return tuple(exponents)


def garsia_stanton_index(sigma: Sequence[int]) -> Permutation:
    """rev(sigma^-1): the permutation w with g_w = x^cw(sigma)."""
    return reverse(inverse(make_permutation(sigma)))


def format_monomial(exponents: Sequence[int]) -> str:
    """Render an exponent vector as e.g. ``x1^2 x2 x4^2``; ``1`` when constant."""
    factors = []
    for j, a in enumerate(exponents, start=1):
        if a == 1:
            factors.append(f"x{j}")
        elif a > 1:
            factors.append(f"x{j}^{a}")
    return " ".join(factors) if factors else "1"


def charge_monomial(w: Sequence[int]) -> Tuple[ExponentVector, str]:
    """Exponent vector of x^cw(w) together with its rendering."""
    exponents = charge_word(w)
    return exponents, format_monomial(exponents)


def max_cocharge(n: int) -> int:
    return comb(n, 2)
