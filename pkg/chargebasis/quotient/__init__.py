"""
Quotient Verifier Module
========================

Independent certification of the combinatorial bases inside the
Garsia-Procesi rings R_mu = QQ[x_1..x_n] / I_mu, using exact Gröbner
bases over the rationals.

Components:
-----------
- polynomial: sympy polynomial rings with x_n > ... > x_1
- groebner: Buchberger, normal forms, standard monomials
- tanisaki: generators of I_mu, quotient dimensions
- verifier: rank certification of monomial and antisymmetrized bases

Example:
--------
```python
from chargebasis.bases import charge_basis
from chargebasis.quotient import certify_basis

result = certify_basis(charge_basis((3, 1)), (3, 1))
assert result.passed and result.graded_ranks == [1, 3, 5, 3]
```
"""

from .polynomial import (
    ORDERS,
    polynomial_ring,
    variable,
    monomial,
    elementary_symmetric,
    permute_variables,
    exponent_terms,
    format_polynomial,
)
from .groebner import (
    GroebnerBasis,
    spoly,
    buchberger,
    normal_form,
    standard_monomials,
    graded_standard_counts,
)
from .tanisaki import (
    boxes_outside_columns,
    tanisaki_generators,
    tanisaki_basis,
    quotient_dimension,
    expected_dimension,
)
from .verifier import (
    Certification,
    QuotientVerifier,
    bareiss_rank,
    apply_antisymmetrizer,
    certify_basis,
    certify_antisym_basis,
)

__all__ = [
    "ORDERS",
    "polynomial_ring",
    "variable",
    "monomial",
    "elementary_symmetric",
    "permute_variables",
    "exponent_terms",
    "format_polynomial",
    "GroebnerBasis",
    "spoly",
    "buchberger",
    "normal_form",
    "standard_monomials",
    "graded_standard_counts",
    "boxes_outside_columns",
    "tanisaki_generators",
    "tanisaki_basis",
    "quotient_dimension",
    "expected_dimension",
    "Certification",
    "QuotientVerifier",
    "bareiss_rank",
    "apply_antisymmetrizer",
    "certify_basis",
    "certify_antisym_basis",
]
