"""
Utilities Module
===============

Configuration management, logging setup, error types and parsing helpers.
"""

from .config import ConfigManager, RunConfig
from .logger import setup_logging
from .errors import (
    ChargeBasisError,
    InvalidPartitionError,
    InvalidTableauError,
    InvalidPermutationError,
    InvalidWordError,
    NonterminationError,
    ChainConditionError,
    ConfigurationError,
)
from .helpers import parse_int_list, parse_word, parse_decomposition, format_word, to_jsonable

__all__ = [
    "ConfigManager",
    "RunConfig",
    "setup_logging",
    "ChargeBasisError",
    "InvalidPartitionError",
    "InvalidTableauError",
    "InvalidPermutationError",
    "InvalidWordError",
    "NonterminationError",
    "ChainConditionError",
    "ConfigurationError",
    "parse_int_list",
    "parse_word",
    "parse_decomposition",
    "format_word",
    "to_jsonable",
]
