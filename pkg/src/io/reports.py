"""JSON reports written by every command"""

from pathlib import Path
from typing import Dict, Optional, Union

from .. import __version__
from ..utils.helpers import dumps_report, json_safe


def build_report(command: str, config: Dict, result: Dict) -> Dict:
    """
    Args:
        command: Command name
        config: Echo of the effective configuration
        result: Command-specific fields; they may not shadow the envelope

    Returns:
        Report dict with version, command and config on top
    """
    report = {'version': __version__, 'command': command, 'config': json_safe(config)}
    clash = set(report) & set(result)
    if clash:
        raise ValueError(f"result fields {sorted(clash)} clash with the report envelope")
    report.update(result)
    return report


def error_report(command: Optional[str], config: Dict, error) -> Dict:
    """Report for a failed command; `error` is a SquierLabError"""
    return {'version': __version__, 'command': command, 'config': json_safe(config),
            'error': error.to_dict()}


def write_report(report: Dict, path: Optional[Union[str, Path]] = None) -> str:
    """Serialize deterministically; also write to `path` when given"""
    text = dumps_report(report)
    if path is not None:
        Path(path).write_text(text + '\n', encoding='utf-8')
    return text
