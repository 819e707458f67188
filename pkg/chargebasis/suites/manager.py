"""
Suite Manager - Theorem Suite Orchestration
===========================================

Resolves suite names and size bounds from configuration, runs suites and
collects their results.
"""

import logging
import time
from typing import Any, Dict, List, Optional

from ..quotient.verifier import QuotientVerifier
from ..utils.config import DEFAULT_LIMITS, DEFAULT_SUITES, RunConfig
from ..utils.errors import ConfigurationError
from .checks import SUITES, SuiteContext, SuiteResult


class SuiteManager:
    """
    Theorem suite runner.

    Each suite runs at the n given on the command line or at its configured
    default, always within the hard limits.
    """

    def __init__(
        self,
        config: Optional[Dict[str, Any]] = None,
        limits: Optional[Dict[str, Any]] = None,
        run_config: Optional[RunConfig] = None,
    ):
        """
        Initialize Suite Manager.

        Args:
            config: ``suites`` configuration section
            limits: ``limits`` configuration section
            run_config: Settings of the current invocation
        """
        self.config = config or DEFAULT_SUITES
        self.limits = limits or DEFAULT_LIMITS
        self.run_config = run_config or RunConfig()
        self.logger = logging.getLogger(__name__)

        self.default_n = {**DEFAULT_SUITES["default_n"], **self.config.get("default_n", {})}
        self.groebner_suites = set(self.config.get("groebner_suites", DEFAULT_SUITES["groebner_suites"]))
        self.verifier = QuotientVerifier(self.limits, self.run_config)

    def available(self) -> List[str]:
        return list(SUITES)

    def resolve(self, name: str) -> List[str]:
        """Expand ``all`` and reject unknown suite names."""
        if name == "all":
            return self.available()
        if name not in SUITES:
            raise ConfigurationError(f"unknown suite {name!r}; expected one of {self.available() + ['all']}")
        return [name]

    def bound(self, name: str, n: Optional[int] = None) -> int:
        """Size bound for a suite; Gröbner-backed suites are capped at the Gröbner limit."""
        n = self.default_n[name] if n is None else n
        if name == "golden":
            return n
        self.run_config.check_combinatorics_size(n, self.limits)
        if name == "prop-b":
            self.run_config.check_groebner_size(n, self.limits)
        return n

    def _context(self, name: str) -> SuiteContext:
        return SuiteContext(
            workers=self.run_config.workers,
            verifier=self.verifier,
            groebner_max_n=self.run_config.groebner_limit(self.limits),
            use_groebner=name in self.groebner_suites,
        )

    def run(self, name: str, n: Optional[int] = None) -> SuiteResult:
        """
        Run one suite.

        Args:
            name: Suite name
            n: Size bound; the configured default when omitted

        Returns:
            SuiteResult with pass flag, counts and recorded failures
        """
        n = self.bound(name, n)
        self.logger.info(f"Running suite {name} at n = {n}")
        started = time.perf_counter()
        result = SUITES[name](n, self._context(name))
        result.seconds = time.perf_counter() - started
        budget = self.limits.get("groebner", DEFAULT_LIMITS["groebner"]).get("time_budget_seconds")
        if name in self.groebner_suites and budget and result.seconds > budget:
            self.logger.warning(f"Suite {name} took {result.seconds:.0f}s, over the {budget}s Gröbner budget")

        if result.passed:
            self.logger.info(f"Suite {name}: {result.checked} cases passed in {result.seconds:.2f}s")
        else:
            self.logger.warning(f"Suite {name}: {result.failure_count} of {result.checked} cases failed")
        return result

    def run_many(self, name: str, n: Optional[int] = None) -> List[SuiteResult]:
        """Run a suite or, for ``all``, every suite in registry order."""
        names = self.resolve(name)
        if len(names) > 1:
            # an explicit n only applies where it is within that suite's limits
            return [self.run(suite, self._fit(suite, n)) for suite in names]
        return [self.run(names[0], n)]

    def _fit(self, name: str, n: Optional[int]) -> Optional[int]:
        if n is None or name == "golden":
            return n
        if name == "prop-b":
            return min(n, self.run_config.groebner_limit(self.limits))
        return min(n, self.limits.get("combinatorics", DEFAULT_LIMITS["combinatorics"])["max_n"])
