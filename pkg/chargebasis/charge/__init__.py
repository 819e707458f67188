"""
Charge Statistics Module
========================

Charge and cocharge words of permutations, the cocharge word
classification, descent monomials and Lascoux-Schutzenberger charge on
words of partition content.

Components:
-----------
- words: cc, cw, is_cocharge_word, descent_word, charge_monomial
- lascoux: charge by standard subword extraction

Example:
--------
```python
from chargebasis.charge import cocharge_word, charge_word

cocharge_word((3, 5, 1, 6, 2, 4, 7))   # (1, 2, 0, 2, 0, 1, 2)
charge_word((7, 4, 2, 6, 1, 5, 3))     # (2, 1, 0, 2, 0, 2, 1)
```
"""

from .words import (
    cocharge_word,
    charge_word,
    charge_statistic,
    cocharge_statistic,
    tableau_charge,
    tableau_cocharge,
    is_cocharge_word,
    cocharge_word_inverse,
    descent_word,
    garsia_stanton_index,
    format_monomial,
    charge_monomial,
    max_cocharge,
)
from .lascoux import content, charge_on_content_word, cocharge_on_content_word

__all__ = [
    "cocharge_word",
    "charge_word",
    "charge_statistic",
    "cocharge_statistic",
    "tableau_charge",
    "tableau_cocharge",
    "is_cocharge_word",
    "cocharge_word_inverse",
    "descent_word",
    "garsia_stanton_index",
    "format_monomial",
    "charge_monomial",
    "max_cocharge",
    "content",
    "charge_on_content_word",
    "cocharge_on_content_word",
]
