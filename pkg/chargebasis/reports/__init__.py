"""
Reporting Module
================

JSON, CSV and markdown reports for command results and theorem suites.

Example:
--------
```python
from chargebasis.reports import ReportGenerator
from chargebasis.utils import RunConfig

reporter = ReportGenerator(output_dir="reports", deterministic=True)
report = reporter.build("basis", RunConfig(mu=(3, 1)), {"size": 12}, passed=True)
reporter.write(report, "basis_3_1.json")
```
"""

from .generator import ReportGenerator, REPORT_SCHEMA_VERSION

__all__ = ["ReportGenerator", "REPORT_SCHEMA_VERSION"]
