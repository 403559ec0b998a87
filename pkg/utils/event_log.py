#!/usr/bin/env python3
"""
Conflict Lattice - Event Log
Every log record carries a CATEGORY and an action next to its message, so
stderr output and the optional log file can be filtered the same way.
"""

import logging
import sys
from pathlib import Path

LOGGER_NAME = 'conflict_lattice'
LOG_FORMAT = '%(asctime)s %(levelname)-7s [%(category)s:%(action)s] %(message)s'

logger = logging.getLogger(LOGGER_NAME)


class _EventDefaults(logging.Filter):
    """Fill category/action for records that did not come through log_event."""

    def filter(self, record):
        if not hasattr(record, 'category'):
            record.category = 'SYSTEM'
        if not hasattr(record, 'action'):
            record.action = record.funcName
        return True


def configure_logging(app):
    """Attach stderr (and optional file) handlers according to the app config."""
    level = app.config.get('LOG_LEVEL', 'WARNING')
    logger.setLevel(level)
    logger.propagate = False

    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(formatter)
    stream_handler.addFilter(_EventDefaults())
    logger.addHandler(stream_handler)

    log_file = app.config.get('LOG_FILE')
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(formatter)
        file_handler.addFilter(_EventDefaults())
        logger.addHandler(file_handler)

    return logger


def log_event(level, category, action, message, details=None):
    """Convenience method to emit one categorized log record."""
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    if not logger.isEnabledFor(level):
        return
    if details:
        message = f'{message} ({details})'
    logger.log(level, message, extra={'category': category.upper(), 'action': action})
