"""
Polynomial Rings
================

Sparse polynomials in x_1, ..., x_n over QQ on top of sympy's ``PolyRing``.
Generators are listed x_n, ..., x_1 so that the ring order ranks x_n highest;
sympy monomials are therefore reversed exponent vectors.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations
from operator import mul
from typing import Dict, Iterable, Sequence, Tuple

from cachetools import cached, LRUCache
from sympy import QQ
from sympy.polys.orderings import grevlex, lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from ..charge.words import ExponentVector, format_monomial
from ..utils.errors import ChargeBasisError
from ..utils.locks import cache_lock

ORDERS = {"grevlex": grevlex, "lex": lex}


@cached(cache=LRUCache(maxsize=64), lock=cache_lock)
def polynomial_ring(n: int, order: str = "grevlex") -> PolyRing:
    """QQ[x_n, ..., x_1] with the named term order."""
    if n < 1:
        raise ChargeBasisError(f"polynomial ring needs at least one variable, got n = {n}")
    if order not in ORDERS:
        raise ChargeBasisError(f"unknown monomial order {order!r}")
    names = ",".join(f"x{i}" for i in range(n, 0, -1))
    result = ring(names, QQ, ORDERS[order])
    return result[0]


def to_monom(exponents: Sequence[int]) -> Tuple[int, ...]:
    return tuple(reversed(tuple(exponents)))


def from_monom(monom: Sequence[int]) -> ExponentVector:
    return tuple(reversed(tuple(monom)))


def variable(R: PolyRing, i: int) -> PolyElement:
    """The generator x_i, 1-based."""
    return R.gens[R.ngens - i]


def monomial(R: PolyRing, exponents: Sequence[int], coefficient=1) -> PolyElement:
    if len(exponents) != R.ngens:
        raise ChargeBasisError(f"exponent vector {tuple(exponents)} has the wrong length for {R.ngens} variables")
    return R.from_dict({to_monom(exponents): coefficient})


def from_exponent_dict(R: PolyRing, terms: Dict[Tuple[int, ...], object]) -> PolyElement:
    return R.from_dict({to_monom(e): c for e, c in terms.items()})


def in_ring(p: PolyElement, R: PolyRing) -> PolyElement:
    """Re-read p in R; both rings must have the same variables."""
    if p.ring == R:
        return p
    if p.ring.ngens != R.ngens:
        raise ChargeBasisError(f"variable count mismatch: {p.ring.ngens} vs {R.ngens}")
    return R.from_dict(dict(p))


def elementary_symmetric(R: PolyRing, indices: Iterable[int], d: int) -> PolyElement:
    """e_d in the variables x_i, i in indices."""
    xs = [variable(R, i) for i in sorted(indices)]
    if d < 0 or d > len(xs):
        return R.zero
    if d == 0:
        return R.one
    return sum((reduce(mul, subset) for subset in combinations(xs, d)), R.zero)


def permute_variables(p: PolyElement, sigma: Sequence[int]) -> PolyElement:
    """sigma . p with x_i mapped to x_{sigma(i)}."""
    n = p.ring.ngens
    terms = {}
    for monom, c in p.items():
        exponents = from_monom(monom)
        image = [0] * n
        for i, a in enumerate(exponents):
            image[sigma[i] - 1] = a
        terms[to_monom(image)] = c
    return p.ring.from_dict(terms)


def to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def exponent_terms(p: PolyElement) -> Dict[ExponentVector, Fraction]:
    return {from_monom(monom): to_fraction(c) for monom, c in p.items()}


def total_degree(exponents: Sequence[int]) -> int:
    return sum(exponents)


def format_polynomial(p: PolyElement) -> str:
    """Render as "x2 x4^2 - x1 x4^2", terms in ring order, highest first."""
    if not p:
        return "0"
    pieces = []
    for monom, c in p.terms():
        c = to_fraction(c)
        body = format_monomial(from_monom(monom))
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if body == "1":
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude} {body}"
        pieces.append((sign, text))
    first_sign, first_text = pieces[0]
    rendered = ("-" if first_sign == "-" else "") + first_text
    for sign, text in pieces[1:]:
        rendered += f" {sign} {text}"
    return rendered
