"""
Catabolism Module
=================

Catabolism, catabolizability type, catabolism insertion and the chains
algorithm that bounds ctype from below.

Components:
-----------
- catabolism: K(T), Cat_m(T), ctype by direct and m-catabolism routes
- blasiak: catabolism insertion, recording fillings, column subwords
- chains: modified row insertion, seed fillings, chains_run, swap checks

Example:
--------
```python
from chargebasis.catabolism import ctype, blasiak_ctype

ctype(((1, 2, 3, 7), (4, 5), (6, 8)))   # (3, 2, 1, 1, 1)
blasiak_ctype((2, 1, 1, 0, 0, 1))       # ((2, 2, 2), ((5, 4), (3, 2), (1, 6)))
```
"""

from .catabolism import (
    d_statistic,
    catabolize,
    catabolize_jdt,
    m_catabolize,
    ctype,
    ctype_direct,
    ctype_by_m_catabolism,
    is_catabolizable,
    has_ctype_at_least,
)
from .blasiak import (
    IndexPair,
    BlasiakStep,
    BlasiakResult,
    blasiak_steps,
    blasiak_insertion,
    blasiak_ctype,
    ctype_of_permutation,
    column_subword,
    row_consistency_holds,
)
from .chains import (
    ChainStep,
    ChainsResult,
    modified_row_insert,
    build_seed_filling,
    validate_chain_state,
    chains_run,
    swap_seed_filling,
    adjacent_swap_check,
    swap_chains_certificate,
)

__all__ = [
    "d_statistic",
    "catabolize",
    "catabolize_jdt",
    "m_catabolize",
    "ctype",
    "ctype_direct",
    "ctype_by_m_catabolism",
    "is_catabolizable",
    "has_ctype_at_least",
    "IndexPair",
    "BlasiakStep",
    "BlasiakResult",
    "blasiak_steps",
    "blasiak_insertion",
    "blasiak_ctype",
    "ctype_of_permutation",
    "column_subword",
    "row_consistency_holds",
    "ChainStep",
    "ChainsResult",
    "modified_row_insert",
    "build_seed_filling",
    "validate_chain_state",
    "chains_run",
    "swap_seed_filling",
    "adjacent_swap_check",
    "swap_chains_certificate",
]
