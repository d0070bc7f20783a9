"""Logging utility for squier-lab"""

import logging
import os
import sys


_LEVEL_ENV = 'SQUIER_LAB_LOG_LEVEL'


def resolve_level(level=None):
    """
    Turn a level name or number into a logging level

    Args:
        level: None, an int, or a name such as 'debug'

    Returns:
        Integer logging level
    """
    if level is None:
        level = os.environ.get(_LEVEL_ENV, 'WARNING')
    if isinstance(level, int):
        return level
    value = logging.getLevelName(str(level).upper())
    return value if isinstance(value, int) else logging.WARNING


def setup_logger(name, level=None):
    """
    Set up a logger with console output

    Reports go to stderr; stdout is reserved for JSON.

    Args:
        name: Logger name
        level: Logging level (name or number); environment default when None

    Returns:
        Logger instance
    """
    logger = logging.getLogger(name)
    level = resolve_level(level)
    logger.setLevel(level)

    # Avoid duplicate handlers
    if logger.handlers:
        return logger

    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    handler.setFormatter(formatter)

    logger.addHandler(handler)
    logger.propagate = False

    return logger


def set_level(level):
    """Apply a level to every logger made by setup_logger so far"""
    level = resolve_level(level)
    for name in list(logging.Logger.manager.loggerDict):
        logger = logging.getLogger(name)
        if logger.handlers and not logger.propagate:
            logger.setLevel(level)
            for handler in logger.handlers:
                handler.setLevel(level)
