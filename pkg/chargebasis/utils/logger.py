"""Logging setup driven by the environment YAML ``logging`` section."""

import os
import logging
from typing import Dict, Any


def setup_logging(log_config: Dict[str, Any]):
    """
    Configure root logging once.

    Args:
        log_config: ``logging`` section with level, format, file and console keys
    """
    log_file = log_config.get("file")
    handlers = []
    if log_file:
        directory = os.path.dirname(log_file)
        if directory:
            os.makedirs(directory, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))
    handlers.append(logging.StreamHandler() if log_config.get("console", True) else logging.NullHandler())

    logging.basicConfig(
        level=getattr(logging, str(log_config.get("level", "INFO")).upper()),
        format=log_config.get("format", "%(asctime)s - %(levelname)s - %(message)s"),
        handlers=handlers,
    )
