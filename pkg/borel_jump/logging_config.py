"""Structured logging configuration for Borel Jump."""

import logging
import json
import sys
from datetime import datetime, timezone
from typing import Any, Dict, Optional

from .config import config

# datetime.UTC is Python 3.11+; timezone.utc is the same object
UTC = timezone.utc

# Structured fields copied from ``extra=`` into JSON records
STRUCTURED_FIELDS = ("automaton", "states", "loops", "label", "objective", "vertices", "seed", "suite")


class JSONFormatter(logging.Formatter):
    """JSON formatter for structured logging."""

    def format(self, record: logging.LogRecord) -> str:
        """Format log record as JSON."""
        log_data: Dict[str, Any] = {
            "timestamp": datetime.now(UTC).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }

        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for name in STRUCTURED_FIELDS:
            if hasattr(record, name):
                log_data[name] = getattr(record, name)

        return json.dumps(log_data, default=str)


class StandardFormatter(logging.Formatter):
    """Standard formatter for human-readable logs."""

    def __init__(self):
        super().__init__(
            fmt="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )


def setup_logging(level: Optional[str] = None, json_logging: Optional[bool] = None):
    """Setup logging configuration.

    Reports go to stdout, so the handler writes to stderr.
    """
    log_level = (level or config.LOG_LEVEL).upper()
    if json_logging is None:
        json_logging = config.JSON_LOGGING

    root_logger = logging.getLogger()
    root_logger.setLevel(getattr(logging, log_level, logging.WARNING))
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, log_level, logging.WARNING))
    console_handler.setFormatter(JSONFormatter() if json_logging else StandardFormatter())
    root_logger.addHandler(console_handler)

    return root_logger


def get_logger(name: str) -> logging.Logger:
    """Get a logger instance."""
    return logging.getLogger(name)
