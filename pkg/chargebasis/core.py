"""
Chargebasis Framework Core
==========================

Main framework class that loads configuration and wires the components.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional

from .quotient import QuotientVerifier
from .reports import ReportGenerator
from .suites import SuiteManager
from .utils import ConfigManager, RunConfig, setup_logging


class ChargeBasisFramework:
    """
    Main chargebasis framework class.

    Provides one entry point to configuration, theorem suites, the quotient
    verifier and report writing.
    """

    def __init__(
        self,
        config_path: str = "config/",
        environment: str = "dev",
        run_config: Optional[RunConfig] = None,
        configure_logging: bool = True,
        **overrides: Any,
    ):
        """
        Initialize chargebasis framework.

        Args:
            config_path: Path to configuration directory
            environment: Environment (dev, prod)
            run_config: Prebuilt run configuration; built from the loaded
                configuration and ``overrides`` when omitted
            configure_logging: Install logging handlers from the environment file
        """
        from . import __version__

        self.__version__ = __version__
        self.config_path = Path(config_path)
        self.environment = environment

        self.config_manager = ConfigManager(str(self.config_path), environment)
        self.config = self._load_config()

        if configure_logging:
            self._setup_logging()
        self.logger = logging.getLogger(__name__)
        self.logger.info(f"Initializing chargebasis v{self.__version__} ({environment})")

        self.run_config = run_config or self.config_manager.run_config(**overrides)
        self._initialize_components()

    def _load_config(self) -> Dict[str, Any]:
        return self.config_manager.config

    def _setup_logging(self):
        setup_logging(self.config.get("environment", {}).get("logging", {}))

    def _initialize_components(self):
        """Initialize all framework components."""
        limits = self.config.get("limits", {})
        reports = self.config.get("environment", {}).get("reports", {})

        self.suites = SuiteManager(self.config.get("suites", {}), limits, self.run_config)
        self.verifier = QuotientVerifier(limits, self.run_config)
        self.reports = ReportGenerator(
            output_dir=reports.get("output_dir", "reports"),
            deterministic=self.run_config.deterministic,
        )
        self.logger.debug("Components initialized")

    @property
    def limits(self) -> Dict[str, Any]:
        return self.config.get("limits", {})

    def get_status(self) -> Dict[str, Any]:
        return {
            "version": self.__version__,
            "environment": self.environment,
            "suites": self.suites.available(),
            "workers": self.run_config.workers,
            "groebner_max_n": self.run_config.groebner_limit(self.limits),
        }
