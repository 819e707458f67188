"""
Symmetric Functions
===================

Homogeneous symmetric functions of a fixed degree with coefficients in
Z[q], expanded in one of the monomial (m), elementary (e), complete (h) or
Schur (s) bases. All conversions pass through the Schur basis:

    s_lam = sum_mu K[lam][mu] m_mu
    h_mu  = sum_lam K[lam][mu] s_lam
    e_mu  = sum_lam K[lam][mu] s_{lam^t}
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple, Union

from ..combinatorics.partitions import Partition, make_partition, sort_composition, transpose
from ..combinatorics.qseries import QPolynomial, ZERO, ONE
from ..utils.errors import InvalidPartitionError
from .kostka import inverse_kostka_matrix, kostka_matrix, partitions_descending

BASES = ("m", "e", "h", "s")

Coefficient = Union[QPolynomial, int]


def _as_q(value: Coefficient) -> QPolynomial:
    return value if isinstance(value, QPolynomial) else QPolynomial.constant(int(value))


@dataclass
class SymmetricFunction:
    """
    ``coeffs`` maps partitions of ``degree`` to q-polynomial coefficients in
    ``basis``. Zero coefficients are dropped.
    """
    degree: int
    basis: str
    coeffs: Dict[Partition, QPolynomial] = field(default_factory=dict)

    def __post_init__(self):
        if self.basis not in BASES:
            raise InvalidPartitionError(f"unknown basis {self.basis!r}; expected one of {BASES}")
        cleaned: Dict[Partition, QPolynomial] = {}
        for lam, value in self.coeffs.items():
            lam = make_partition(lam)
            if sum(lam) != self.degree:
                raise InvalidPartitionError(f"{lam} is not a partition of {self.degree}")
            value = _as_q(value)
            if not value.is_zero():
                cleaned[lam] = cleaned.get(lam, ZERO) + value
        self.coeffs = {lam: c for lam, c in cleaned.items() if not c.is_zero()}

    def coefficient(self, lam: Sequence[int]) -> QPolynomial:
        return self.coeffs.get(tuple(lam), ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_basis(self, basis: str) -> "SymmetricFunction":
        return to_basis(self, basis)

    def __add__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        _check_degrees(self, other)
        other = to_basis(other, self.basis)
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, ZERO) + c
        return SymmetricFunction(self.degree, self.basis, merged)

    def __sub__(self, other: "SymmetricFunction") -> "SymmetricFunction":
        return self + other.scale(-1)

    def scale(self, factor: Coefficient) -> "SymmetricFunction":
        factor = _as_q(factor)
        return SymmetricFunction(
            self.degree, self.basis, {lam: c * factor for lam, c in self.coeffs.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        if self.degree != other.degree:
            return False
        return to_basis(self, "s").coeffs == to_basis(other, "s").coeffs

    def to_dict(self) -> dict:
        """JSON form: partitions as comma joined keys, coefficients as arrays."""
        ordered = [lam for lam in partitions_descending(self.degree) if lam in self.coeffs]
        return {
            "degree": self.degree,
            "basis": self.basis,
            "coefficients": {
                ",".join(str(p) for p in lam): self.coeffs[lam].to_list() for lam in ordered
            },
        }

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for lam in partitions_descending(self.degree):
            if lam in self.coeffs:
                index = ",".join(str(p) for p in lam)
                terms.append(f"({self.coeffs[lam]}) {self.basis}[{index}]")
        return " + ".join(terms)


def _check_degrees(f: SymmetricFunction, g: SymmetricFunction):
    if f.degree != g.degree:
        raise InvalidPartitionError(f"degree mismatch: {f.degree} vs {g.degree}")


def _basis_element(basis: str, lam: Sequence[int]) -> SymmetricFunction:
    lam = make_partition(sort_composition(lam))
    return SymmetricFunction(sum(lam), basis, {lam: ONE})


def schur(lam: Sequence[int]) -> SymmetricFunction:
    return _basis_element("s", lam)


def complete(lam: Sequence[int]) -> SymmetricFunction:
    """h_lam; compositions are sorted into partitions."""
    return _basis_element("h", lam)


def elementary(lam: Sequence[int]) -> SymmetricFunction:
    """e_lam; compositions are sorted into partitions."""
    return _basis_element("e", lam)


def monomial(lam: Sequence[int]) -> SymmetricFunction:
    return _basis_element("m", lam)


def _accumulate(pairs: Iterable[Tuple[Partition, QPolynomial]]) -> Dict[Partition, QPolynomial]:
    result: Dict[Partition, QPolynomial] = {}
    for lam, c in pairs:
        if not c.is_zero():
            result[lam] = result.get(lam, ZERO) + c
    return result


def _to_schur(f: SymmetricFunction) -> Dict[Partition, QPolynomial]:
    n = f.degree
    if f.basis == "s":
        return dict(f.coeffs)
    if f.basis == "h":
        k = kostka_matrix(n)
        return _accumulate(
            (lam, c * k[lam][mu]) for mu, c in f.coeffs.items() for lam in k if k[lam][mu]
        )
    if f.basis == "e":
        k = kostka_matrix(n)
        return _accumulate(
            (transpose(lam), c * k[lam][mu]) for mu, c in f.coeffs.items() for lam in k if k[lam][mu]
        )
    inverse = inverse_kostka_matrix(n)
    return _accumulate(
        (lam, c * inverse[mu][lam]) for mu, c in f.coeffs.items() for lam in inverse[mu] if inverse[mu][lam]
    )


def _from_schur(n: int, coeffs: Dict[Partition, QPolynomial], basis: str) -> Dict[Partition, QPolynomial]:
    if basis == "s":
        return dict(coeffs)
    if basis == "m":
        k = kostka_matrix(n)
        return _accumulate(
            (mu, c * k[lam][mu]) for lam, c in coeffs.items() for mu in k[lam] if k[lam][mu]
        )
    inverse = inverse_kostka_matrix(n)
    if basis == "h":
        source = coeffs
    else:
        source = {transpose(lam): c for lam, c in coeffs.items()}
    return _accumulate(
        (mu, c * inverse[mu][lam]) for lam, c in source.items() for mu in inverse if inverse[mu][lam]
    )


def to_basis(f: SymmetricFunction, basis: str) -> SymmetricFunction:
    """
    Re-expand f in another basis.

    Raises:
        InvalidPartitionError: if the basis tag is unknown
    """
    if basis not in BASES:
        raise InvalidPartitionError(f"unknown basis {basis!r}; expected one of {BASES}")
    if basis == f.basis:
        return SymmetricFunction(f.degree, basis, dict(f.coeffs))
    return SymmetricFunction(f.degree, basis, _from_schur(f.degree, _to_schur(f), basis))


def omega(f: SymmetricFunction) -> SymmetricFunction:
    """The involution with omega(s_lam) = s_{lam^t} and omega(e_lam) = h_lam."""
    if f.basis == "s":
        return SymmetricFunction(f.degree, "s", {transpose(lam): c for lam, c in f.coeffs.items()})
    if f.basis in ("e", "h"):
        return SymmetricFunction(f.degree, "h" if f.basis == "e" else "e", dict(f.coeffs))
    return to_basis(omega(to_basis(f, "s")), "m")


def hall_inner_product(f: SymmetricFunction, g: SymmetricFunction) -> QPolynomial:
    """
    <f, g> with m and h dual and s orthonormal.

    Raises:
        InvalidPartitionError: if the degrees differ
    """
    _check_degrees(f, g)
    if {f.basis, g.basis} == {"m", "h"}:
        left, right = f.coeffs, g.coeffs
    else:
        left, right = _to_schur(f), _to_schur(g)
    total = ZERO
    for lam, c in left.items():
        if lam in right:
            total = total + c * right[lam]
    return total


def evaluate_at_one(f: SymmetricFunction) -> SymmetricFunction:
    """Specialize q = 1."""
    return SymmetricFunction(
        f.degree, f.basis, {lam: QPolynomial.constant(c.evaluate(1)) for lam, c in f.coeffs.items()}
    )


def monomial_coefficient(f: SymmetricFunction, gamma: Sequence[int]) -> QPolynomial:
    """Coefficient of m_gamma in f, equal to <f, h_gamma>."""
    return to_basis(f, "m").coefficient(sort_composition(gamma))
