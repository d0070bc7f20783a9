"""
IO Module
Presentation, Y-sequence, cycle and table parsers plus JSON reports
"""

from .presentation import (
    FORMAT,
    parse_presentation,
    parse_presentation_text,
    serialize_presentation,
)
from .sequences import parse_sequence, read_sequence
from .cycles import chain_from_dict, chain_to_dict, parse_cycle
from .tables import load_monoid
from .reports import build_report, error_report, write_report

__all__ = [
    'FORMAT', 'parse_presentation', 'parse_presentation_text', 'serialize_presentation',
    'parse_sequence', 'read_sequence', 'chain_from_dict', 'chain_to_dict', 'parse_cycle',
    'load_monoid',
    'build_report', 'error_report', 'write_report',
]
