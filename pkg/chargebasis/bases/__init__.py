"""
Monomial Bases Module
=====================

Monomial bases of the Garsia-Procesi rings R_mu and of the coinvariant
ring, as sets of exponent vectors.

Components:
-----------
- monomials: MonomialSet, Artin and descent bases, shuffles, descent order
- builder: charge monomial set C_mu, shuffle set D_mu, shuffle witnesses
- antisym: sort_gamma and the antisymmetric index sets

Example:
--------
```python
from chargebasis.bases import charge_basis, cc_shuffle_basis

c = charge_basis((3, 1))
d = cc_shuffle_basis((3, 1))
assert c.members == d.members
print(c.hilbert_series())   # 1 + 3q + 5q^2 + 3q^3
```
"""

from .monomials import (
    MonomialSet,
    descent_key,
    descent_compare,
    hilbert_series,
    artin_monomial,
    artin_basis,
    descent_basis,
    shuffle_set,
    reverse_shuffle_set,
    sorted_by_descent_order,
)
from .builder import (
    ShuffleWitness,
    qualifying_tableaux,
    charge_basis,
    in_charge_basis,
    cc_shuffle_basis,
    shuffle_witness,
    hilbert_series_cocharge,
)
from .antisym import (
    AntisymEntry,
    AntisymIndexSet,
    sort_gamma,
    antisym_index_set,
    in_reverse_young_shuffle,
    cc_antisym_index_set,
)

__all__ = [
    "MonomialSet",
    "descent_key",
    "descent_compare",
    "hilbert_series",
    "artin_monomial",
    "artin_basis",
    "descent_basis",
    "shuffle_set",
    "reverse_shuffle_set",
    "sorted_by_descent_order",
    "ShuffleWitness",
    "qualifying_tableaux",
    "charge_basis",
    "in_charge_basis",
    "cc_shuffle_basis",
    "shuffle_witness",
    "hilbert_series_cocharge",
    "AntisymEntry",
    "AntisymIndexSet",
    "sort_gamma",
    "antisym_index_set",
    "in_reverse_young_shuffle",
    "cc_antisym_index_set",
]
