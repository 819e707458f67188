"""
Configuration Management
========================

Loads the YAML configuration directory (``limits.yaml``, ``suites.yaml`` and
``environments/<env>.yaml``) and builds validated run configurations.
"""

import os
import logging
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Dict, Any, List, Optional, Tuple

import yaml
from dotenv import load_dotenv

from .errors import ConfigurationError

logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "CHARGEBASIS_THREADS"

DEFAULT_LIMITS: Dict[str, Any] = {
    "combinatorics": {"max_n": 8},
    "groebner": {"max_n": 5, "opt_in_max_n": 6, "time_budget_seconds": 1800},
}

DEFAULT_SUITES: Dict[str, Any] = {
    "seed": 20240601,
    "default_n": {
        "thm-a": 7,
        "cardinality": 8,
        "hilbert": 7,
        "ctype-oracles": 7,
        "sum-of-ctypes": 8,
        "swap": 7,
        "cocharge-classification": 7,
        "prop-b": 4,
        "frobenius": 6,
        "hl-routes": 6,
        "golden": 10,
    },
    "groebner_suites": ["prop-b", "hilbert"],
}

DEFAULT_ENVIRONMENT: Dict[str, Any] = {
    "logging": {
        "level": "INFO",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": "logs/chargebasis.log",
        "console": True,
    },
    "workers": {"threads": 1},
    "reports": {"output_dir": "reports", "deterministic": False},
}


def _merge(base: Dict[str, Any], override: Optional[Dict[str, Any]]) -> Dict[str, Any]:
    """Recursively merge ``override`` into a copy of ``base``."""
    merged = dict(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class ConfigManager:
    """
    Configuration loader.

    Reads YAML files from a configuration directory and overlays them on the
    built-in defaults, so a missing directory still yields a usable config.
    """

    CONFIG_FILES = ["limits.yaml", "suites.yaml"]

    def __init__(self, config_path: str = "config/", environment: str = "dev"):
        """
        Initialize configuration manager.

        Args:
            config_path: Path to configuration directory
            environment: Environment (dev, prod)
        """
        self.config_path = Path(config_path)
        self.environment = environment
        load_dotenv()
        self.config = self._load_config()

    def _load_config(self) -> Dict[str, Any]:
        """Load configuration from YAML files."""
        loaded: Dict[str, Any] = {}

        for config_file in self.CONFIG_FILES:
            path = self.config_path / config_file
            if path.exists():
                with open(path, "r") as f:
                    loaded[config_file.replace(".yaml", "")] = yaml.safe_load(f) or {}

        env_path = self.config_path / "environments" / f"{self.environment}.yaml"
        if env_path.exists():
            with open(env_path, "r") as f:
                loaded["environment"] = yaml.safe_load(f) or {}

        return {
            "limits": _merge(DEFAULT_LIMITS, loaded.get("limits")),
            "suites": _merge(DEFAULT_SUITES, loaded.get("suites")),
            "environment": _merge(DEFAULT_ENVIRONMENT, loaded.get("environment")),
        }

    def get(self, section: str, default: Any = None) -> Any:
        return self.config.get(section, default)

    def threads(self) -> int:
        """Worker count: environment variable first, then environment YAML."""
        raw = os.environ.get(THREADS_ENV_VAR)
        if raw is not None:
            try:
                value = int(raw)
            except ValueError:
                raise ConfigurationError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
            if value < 1:
                raise ConfigurationError(f"{THREADS_ENV_VAR} must be positive, got {value}")
            return value
        return int(self.config["environment"]["workers"].get("threads", 1))

    def run_config(self, **overrides: Any) -> "RunConfig":
        """Build a validated RunConfig from loaded values plus CLI overrides."""
        suites = self.config["suites"]
        values: Dict[str, Any] = {
            "seed": suites.get("seed", DEFAULT_SUITES["seed"]),
            "workers": self.threads(),
            "deterministic": self.config["environment"]["reports"].get("deterministic", False),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        run_config = RunConfig(**values)
        run_config.validate(self.config["limits"])
        return run_config


@dataclass
class RunConfig:
    """Settings for one command invocation; embedded in every report."""
    n: Optional[int] = None
    suite: Optional[str] = None
    mu: Optional[Tuple[int, ...]] = None
    gamma: Optional[Tuple[int, ...]] = None
    output_format: str = "json"
    output_path: Optional[str] = None
    seed: int = DEFAULT_SUITES["seed"]
    order: str = "grevlex"
    groebner_n6: bool = False
    workers: int = 1
    deterministic: bool = False
    extra: Dict[str, Any] = field(default_factory=dict)

    def validate(self, limits: Dict[str, Any]):
        """
        Check bounds against the hard limits.

        Raises:
            ConfigurationError: if any bound is exceeded
        """
        if self.output_format not in ("json", "csv"):
            raise ConfigurationError(f"unknown output format {self.output_format!r}")
        if self.order not in ("grevlex", "lex"):
            raise ConfigurationError(f"unknown monomial order {self.order!r}")
        if self.workers < 1:
            raise ConfigurationError("workers must be positive")
        if self.n is not None and self.n < 0:
            raise ConfigurationError("n must be nonnegative")
        if self.n is not None and self.suite not in (None, "golden"):
            self.check_combinatorics_size(self.n, limits)

    def groebner_limit(self, limits: Dict[str, Any]) -> int:
        groebner = limits.get("groebner", DEFAULT_LIMITS["groebner"])
        return groebner["opt_in_max_n"] if self.groebner_n6 else groebner["max_n"]

    def check_groebner_size(self, n: int, limits: Dict[str, Any]):
        """Raise ConfigurationError when n exceeds the Gröbner hard limit."""
        limit = self.groebner_limit(limits)
        if n > limit:
            hint = "" if self.groebner_n6 else " (pass --groebner-n6 to allow n = 6)"
            raise ConfigurationError(f"Gröbner path is limited to n <= {limit}, got n = {n}{hint}")

    def check_combinatorics_size(self, n: int, limits: Dict[str, Any]):
        limit = limits.get("combinatorics", DEFAULT_LIMITS["combinatorics"])["max_n"]
        if n > limit:
            raise ConfigurationError(f"combinatorial suites are limited to n <= {limit}, got n = {n}")

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        for key in ("mu", "gamma"):
            if data[key] is not None:
                data[key] = list(data[key])
        return data
