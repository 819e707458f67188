"""
Permutation Statistics Module
=============================

Permutations in one-line notation, their statistics and the RSK
correspondence.

Components:
-----------
- stats: inverse, reverse, descents, maj, inv and Mahonian generating functions
- rsk: row insertion RSK, its inverse and insertion tableaux of words

Example:
--------
```python
from chargebasis.permutations import rsk, maj

P, Q = rsk((2, 1, 3, 4))   # P = ((1, 3, 4), (2,))
maj((3, 1, 2))             # 1
```
"""

from .stats import (
    Permutation,
    make_permutation,
    is_permutation,
    all_permutations,
    identity,
    inverse,
    reverse,
    descent_set,
    maj,
    inv,
    inversion_set,
    maj_generating_function,
    inv_generating_function,
    swap_adjacent,
)
from .rsk import rsk, rsk_inverse, insertion_tableau

__all__ = [
    "Permutation",
    "make_permutation",
    "is_permutation",
    "all_permutations",
    "identity",
    "inverse",
    "reverse",
    "descent_set",
    "maj",
    "inv",
    "inversion_set",
    "maj_generating_function",
    "inv_generating_function",
    "swap_adjacent",
    "rsk",
    "rsk_inverse",
    "insertion_tableau",
]
