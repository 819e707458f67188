"""
Theorem Suites Module
=====================

Exhaustive verification suites over all inputs up to a size bound.

Example:
--------
```python
from chargebasis.suites import SuiteManager

result = SuiteManager().run("thm-a", n=5)
assert result.passed
```
"""

from .checks import SUITES, SuiteContext, SuiteResult, MAX_RECORDED_FAILURES
from .manager import SuiteManager

__all__ = ["SUITES", "SuiteContext", "SuiteResult", "SuiteManager", "MAX_RECORDED_FAILURES"]
