"""
Q-Series
========

Polynomials in a single formal variable q with exact integer coefficients.
Used for graded counts: Hilbert series, q-Kostka polynomials and the
coefficients of symmetric functions.
"""

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple, Union


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    values = list(coeffs)
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


@dataclass(frozen=True)
class QPolynomial:
    """
    Polynomial in q; ``coeffs[d]`` is the coefficient of q^d.

    Trailing zeros are trimmed so equal polynomials compare equal. The zero
    polynomial has an empty coefficient tuple.
    """
    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "QPolynomial":
        if degree < 0:
            raise ValueError("negative q-degree")
        return cls((0,) * degree + (coefficient,))

    @classmethod
    def constant(cls, value: int) -> "QPolynomial":
        return cls((value,))

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "QPolynomial":
        """Generating function of a multiset of degrees: sum of q^d."""
        counts: Dict[int, int] = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        if not counts:
            return cls()
        return cls(tuple(counts.get(d, 0) for d in range(max(counts) + 1)))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, degree: int) -> int:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else 0

    def evaluate(self, q: int = 1) -> int:
        total = 0
        for c in reversed(self.coeffs):
            total = total * q + c
        return total

    def __add__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return QPolynomial(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["QPolynomial", int]) -> "QPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return QPolynomial()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return QPolynomial(tuple(product))

    __rmul__ = __mul__

    def to_list(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                body = str(c)
            else:
                power = "q" if d == 1 else f"q^{d}"
                body = power if c == 1 else (f"-{power}" if c == -1 else f"{c}{power}")
            terms.append(body)
        text = " + ".join(terms)
        return text.replace("+ -", "- ")


def _coerce(value: Union[QPolynomial, int]) -> QPolynomial:
    if isinstance(value, QPolynomial):
        return value
    return QPolynomial((int(value),))


ZERO = QPolynomial()
ONE = QPolynomial((1,))


def q_integer(k: int) -> QPolynomial:
    """[k]_q = 1 + q + ... + q^(k-1)."""
    return QPolynomial((1,) * k)


def q_factorial(n: int) -> QPolynomial:
    """[n]_q! = [1]_q [2]_q ... [n]_q."""
    result = ONE
    for k in range(1, n + 1):
        result = result * q_integer(k)
    return result
