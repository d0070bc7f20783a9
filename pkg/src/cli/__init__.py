"""
CLI Module
Run configuration, command dispatch and the argparse entry point
"""

from .config import COMMANDS, RunConfig
from .commands import COMMAND_HANDLERS, group_normal_forms, run
from .main import build_parser, main

__all__ = ['COMMANDS', 'RunConfig', 'COMMAND_HANDLERS', 'group_normal_forms', 'run',
           'build_parser', 'main']
