"""
Combinatorics Core
==================

Partitions, compositions, dominance order, Young tableaux in French
convention, jeu de taquin and canonical enumerations.

Components:
-----------
- partitions: Partition/Composition validation, transpose, dominance
- tableaux: Tableau helpers, reading words, transposition, descents
- jdt: SkewTableau and jeu-de-taquin rectification
- enumeration: SYT and SSYT enumeration in reading-word order
- qseries: QPolynomial, q-integers and q-factorials

Example:
--------
```python
from chargebasis.combinatorics import transpose, dominates, reading_word

transpose((3, 1))                        # (2, 1, 1)
dominates((3, 1), (2, 2))                # True
reading_word(((1, 3, 4), (2, 5), (6,)))  # (6, 2, 5, 1, 3, 4)
```
"""

from .qseries import QPolynomial, q_integer, q_factorial
from .partitions import (
    Partition,
    Composition,
    make_partition,
    make_composition,
    is_partition,
    transpose,
    dominates,
    n_statistic,
    partial_sums,
    partwise_sum,
    sort_composition,
    enumerate_partitions,
    enumerate_compositions,
    hook_length_count,
)
from .tableaux import (
    Tableau,
    Word,
    make_tableau,
    shape,
    reading_word,
    transpose_tableau,
    is_semistandard,
    is_standard,
    descent_set_tableau,
    tableau_to_json,
)
from .jdt import SkewTableau, jdt_rectify, skew_reading_word, catabolism_skew
from .enumeration import enumerate_syt, enumerate_all_syt, enumerate_ssyt

__all__ = [
    "QPolynomial",
    "q_integer",
    "q_factorial",
    "Partition",
    "Composition",
    "make_partition",
    "make_composition",
    "is_partition",
    "transpose",
    "dominates",
    "n_statistic",
    "partial_sums",
    "partwise_sum",
    "sort_composition",
    "enumerate_partitions",
    "enumerate_compositions",
    "hook_length_count",
    "Tableau",
    "Word",
    "make_tableau",
    "shape",
    "reading_word",
    "transpose_tableau",
    "is_semistandard",
    "is_standard",
    "descent_set_tableau",
    "tableau_to_json",
    "SkewTableau",
    "jdt_rectify",
    "skew_reading_word",
    "catabolism_skew",
    "enumerate_syt",
    "enumerate_all_syt",
    "enumerate_ssyt",
]
