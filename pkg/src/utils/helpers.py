"""Helper utilities for squier-lab"""

import json
import sys

from tqdm import tqdm


JSON_SAFE_LIMIT = 2 ** 53


def progress(iterable, enabled=False, desc=None, total=None):
    """
    Wrap an iterable in a tqdm bar on stderr

    Args:
        iterable: Items to iterate
        enabled: Show the bar at all
        desc: Bar label
        total: Length hint

    Returns:
        Iterable (plain or tqdm-wrapped)
    """
    show = enabled and sys.stderr.isatty()
    return tqdm(iterable, desc=desc, total=total, disable=not show, file=sys.stderr, leave=False)


def json_safe(value):
    """
    Make a value JSON-safe: big ints become decimal strings, tuples become lists

    Args:
        value: Nested dict/list/tuple/int/str/etc.

    Returns:
        Converted value
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value) if abs(value) >= JSON_SAFE_LIMIT else value
    if isinstance(value, dict):
        return {str(k): json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_safe(v) for v in value]
    return value


def dumps_report(report):
    """Deterministic JSON serialization used by every CLI report"""
    return json.dumps(json_safe(report), sort_keys=True, indent=2, ensure_ascii=False)
