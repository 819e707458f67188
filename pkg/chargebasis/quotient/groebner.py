"""
Buchberger's Algorithm
======================

Reduced Gröbner bases over QQ with normal pair selection and the
Gebauer-Möller pair criteria, plus normal forms and standard monomials of
the quotient.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Set, Tuple

from sympy.polys.rings import PolyElement, PolyRing

from ..charge.words import ExponentVector
from ..utils.errors import ChargeBasisError
from .polynomial import from_monom, in_ring, polynomial_ring

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def spoly(f: PolyElement, g: PolyElement) -> PolyElement:
    """S-polynomial of monic f and g."""
    R = f.ring
    lcm = R.monomial_lcm(f.LM, g.LM)
    return f.mul_monom(R.monomial_div(lcm, f.LM)) - g.mul_monom(R.monomial_div(lcm, g.LM))


def _select(G: List[PolyElement], P: Set[Pair]) -> Pair:
    R = G[0].ring
    return min(P, key=lambda p: (R.order(R.monomial_lcm(G[p[0]].LM, G[p[1]].LM)), p))


def _update(G: List[PolyElement], P: Set[Pair], f: PolyElement) -> Tuple[List[PolyElement], Set[Pair]]:
    """Add f to G, pruning old pairs and new pairs by the Gebauer-Möller criteria."""
    R = f.ring
    lcm, mul, div = R.monomial_lcm, R.monomial_mul, R.monomial_div
    lmf = f.LM
    lmG = [g.LM for g in G]

    kept = {
        p for p in P
        if not div(lcm(lmG[p[0]], lmG[p[1]]), lmf)
        or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[0]], lmf)
        or lcm(lmG[p[0]], lmG[p[1]]) == lcm(lmG[p[1]], lmf)
    }
    by_lcm = {}
    for i in range(len(G)):
        by_lcm.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=R.order):
        if all(not div(L, other) for other in minimal):
            minimal.append(L)
    new = set()
    for L in minimal:
        # coprime leading monomials reduce to zero
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in by_lcm[L]):
            new.add((min(by_lcm[L]), len(G)))
    return G + [f], kept | new


def _minimalize(G: List[PolyElement]) -> List[PolyElement]:
    R = G[0].ring
    result: List[PolyElement] = []
    for f in sorted(G, key=lambda h: R.order(h.LM)):
        if all(not R.monomial_div(f.LM, g.LM) for g in result):
            result.append(f)
    return result


def _interreduce(G: List[PolyElement]) -> List[PolyElement]:
    reduced = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        reduced.append((g.rem(others) if others else g).monic())
    return reduced


@dataclass
class GroebnerBasis:
    """
    Reduced Gröbner basis of an ideal of QQ[x_1, ..., x_n].

    ``polynomials`` are monic and sorted by increasing leading monomial.
    """
    ring: PolyRing
    order: str
    polynomials: Tuple[PolyElement, ...]
    _standard: Optional[Tuple[ExponentVector, ...]] = field(default=None, repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.ring.ngens

    def leading_monomials(self) -> Tuple[ExponentVector, ...]:
        return tuple(from_monom(g.LM) for g in self.polynomials)

    def normal_form(self, p: PolyElement) -> PolyElement:
        return normal_form(p, self)

    def contains(self, p: PolyElement) -> bool:
        return not normal_form(p, self)

    def standard_monomials(self) -> Tuple[ExponentVector, ...]:
        if self._standard is None:
            self._standard = standard_monomials(self)
        return self._standard

    def graded_standard_counts(self) -> List[int]:
        return graded_standard_counts(self)

    def quotient_dimension(self) -> int:
        return len(self.standard_monomials())

    def __len__(self) -> int:
        return len(self.polynomials)


def buchberger(
    generators: Sequence[PolyElement], order: str = "grevlex", n: Optional[int] = None
) -> GroebnerBasis:
    """
    Reduced Gröbner basis of the ideal spanned by ``generators``.

    Args:
        generators: Polynomials over a common set of variables
        order: "grevlex" or "lex", always with x_n > ... > x_1
        n: Variable count; required only when ``generators`` is empty

    Returns:
        GroebnerBasis; empty for the zero ideal
    """
    if n is None:
        if not generators:
            raise ChargeBasisError("variable count is required for an empty generating set")
        n = generators[0].ring.ngens
    R = polynomial_ring(n, order)
    F = [in_ring(f, R) for f in generators]
    F = [f for f in F if f]

    G: List[PolyElement] = []
    P: Set[Pair] = set()
    for f in F:
        G, P = _update(G, P, f.monic())

    reductions = 0
    while P:
        pair = _select(G, P)
        P.remove(pair)
        r = spoly(G[pair[0]], G[pair[1]]).rem(G)
        reductions += 1
        if r:
            G, P = _update(G, P, r.monic())

    basis = _interreduce(_minimalize(G)) if G else []
    basis.sort(key=lambda g: R.order(g.LM))
    logger.debug(
        f"Gröbner basis in {n} variables ({order}): {len(F)} generators, "
        f"{reductions} S-pair reductions, {len(basis)} basis elements"
    )
    return GroebnerBasis(ring=R, order=order, polynomials=tuple(basis))


def normal_form(p: PolyElement, basis: GroebnerBasis) -> PolyElement:
    """
    Remainder of p on division by the basis, supported on standard monomials.

    Raises:
        ChargeBasisError: if p has a different variable count
    """
    p = in_ring(p, basis.ring)
    if not basis.polynomials:
        return p
    return p.rem(list(basis.polynomials))


def _divisible(exponents: Sequence[int], lead: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(exponents, lead))


def standard_monomials(basis: GroebnerBasis) -> Tuple[ExponentVector, ...]:
    """
    Monomials outside the leading-term ideal, by degree then reverse lex.

    Raises:
        ChargeBasisError: if the quotient is infinite dimensional
    """
    n = basis.n
    leads = basis.leading_monomials()
    for i in range(n):
        if not any(lead[i] > 0 and sum(lead) == lead[i] for lead in leads):
            raise ChargeBasisError(f"x{i + 1} has no pure power among the leading terms; quotient is infinite")

    found: List[ExponentVector] = []
    level = {(0,) * n}
    while level:
        level = {e for e in level if not any(_divisible(e, lead) for lead in leads)}
        found.extend(sorted(level, reverse=True))
        level = {
            e[:i] + (e[i] + 1,) + e[i + 1:] for e in level for i in range(n)
        }
    return tuple(found)


def graded_standard_counts(basis: GroebnerBasis) -> List[int]:
    """Standard monomials per degree, index = degree."""
    counts: List[int] = []
    for e in basis.standard_monomials():
        d = sum(e)
        while len(counts) <= d:
            counts.append(0)
        counts[d] += 1
    return counts
