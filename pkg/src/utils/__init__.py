"""
Utils Module
Logging, configuration, exceptions and shared helpers
"""

from .config import load_config
from .exceptions import SquierLabError
from .helpers import dumps_report, json_safe, progress
from .logger import set_level, setup_logger
from .union_find import UnionFind

__all__ = ['load_config', 'SquierLabError', 'dumps_report', 'json_safe', 'progress',
           'set_level', 'setup_logger', 'UnionFind']
