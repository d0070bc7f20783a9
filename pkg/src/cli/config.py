"""Run configuration for one CLI invocation"""

from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional

import yaml

from ..utils.config import load_config
from ..utils.exceptions import ConfigError


COMMANDS = ('complete', 'normalize', 'pairs', 'confluent', 'build', 'homology', 'boundary-check',
            'aspherical', 'peiffer', 'dominion', 'wdom-probe')

LOOP_CHOICES = ('auto', 'none', 'resolution', 'pride')

# loop families selectable with --p-cells on group presentations
P_CELL_FAMILIES = ('q', 't')

PEIFFER_ACTIONS = ('reduce',)

REPORT_CHOICES = ('summary', 'cycles')

# field -> command-line flag where they differ
FLAGS = {'length_bound': 'truncate', 'sequence': 'seq', 'dimension': 'dim'}


@dataclass
class RunConfig:
    """
    Everything a command needs; bounds default to the YAML configuration.

    `length_bound` is the truncation L. `margin` must satisfy L >= m >= 0.
    """

    command: str
    inputs: List[str] = field(default_factory=list)
    length_bound: Optional[int] = None
    margin: Optional[int] = None
    word: Optional[str] = None
    sequence: Optional[str] = None
    sequence_file: Optional[str] = None
    cycle: Optional[str] = None
    sub: Optional[str] = None
    element: Optional[str] = None
    dimension: Optional[int] = None
    three_cells: bool = False
    loops: str = 'auto'
    p_cells: Optional[str] = None
    report: str = 'summary'
    no_interreduce: bool = False
    action: Optional[str] = None
    confluence_bound: int = 6
    step_limit: Optional[int] = None
    max_rules: Optional[int] = None
    max_lhs_len: Optional[int] = None
    max_cells: Optional[int] = None
    max_steps: Optional[int] = None
    max_states: Optional[int] = None
    subgroup_bound: Optional[int] = None
    seed: int = 0
    output: Optional[str] = None
    config_path: Optional[str] = None

    def __post_init__(self):
        try:
            settings = load_config(self.config_path)
        except (OSError, yaml.YAMLError) as exc:
            raise ConfigError(f"cannot load configuration {self.config_path}: {exc}") from None
        self.settings = settings
        defaults = {
            'margin': settings['complex']['margin'],
            'step_limit': settings['rewriting']['step_limit'],
            'max_rules': settings['rewriting']['max_rules'],
            'max_lhs_len': settings['rewriting']['max_lhs_len'],
            'max_cells': settings['complex']['max_cells'],
            'max_steps': settings['peiffer']['max_steps'],
            'max_states': settings['peiffer']['max_states'],
            'subgroup_bound': settings['actions']['subgroup_bound'],
        }
        for key, value in defaults.items():
            if getattr(self, key) is None:
                setattr(self, key, value)
        # `peiffer reduce FILE` names the action before the input
        if self.command == 'peiffer' and self.action is None and self.inputs \
                and self.inputs[0] in PEIFFER_ACTIONS:
            self.action, self.inputs = self.inputs[0], list(self.inputs[1:])
        if self.command == 'peiffer' and self.action is None:
            self.action = 'reduce'
        self.validate()

    @property
    def show_progress(self) -> bool:
        return bool(self.settings['progress']['enabled'])

    @property
    def interreduce(self) -> bool:
        if self.no_interreduce:
            return False
        return bool(self.settings['rewriting']['interreduce'])

    @property
    def loop_families(self) -> List[str]:
        """Families named by --p-cells, in the order given"""
        if not self.p_cells:
            return []
        return [token.strip() for token in self.p_cells.split(',') if token.strip()]

    def validate(self):
        """
        Raises:
            ConfigError: unknown command, nonpositive bound, or not L >= m >= 0
        """
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.loops not in LOOP_CHOICES:
            raise ConfigError(f"loops must be one of {LOOP_CHOICES}")
        for family in self.loop_families:
            if family not in P_CELL_FAMILIES:
                raise ConfigError(f"p-cells must be drawn from {P_CELL_FAMILIES}, got {family!r}")
        if self.p_cells is not None and not self.loop_families:
            raise ConfigError("p-cells names no loop family")
        if self.report not in REPORT_CHOICES:
            raise ConfigError(f"report must be one of {REPORT_CHOICES}")
        if self.action is not None and self.action not in PEIFFER_ACTIONS:
            raise ConfigError(f"unknown peiffer action {self.action!r}")
        if self.sequence is not None and self.sequence_file is not None:
            raise ConfigError("give either --seq or --sequence, not both")
        for key in ('step_limit', 'max_rules', 'max_lhs_len', 'max_cells', 'max_steps', 'max_states',
                    'subgroup_bound', 'confluence_bound'):
            if getattr(self, key) <= 0:
                raise ConfigError(f"{key} must be positive, got {getattr(self, key)}")
        if self.margin < 0:
            raise ConfigError(f"margin must be >= 0, got {self.margin}")
        if self.length_bound is not None:
            if self.length_bound < 0:
                raise ConfigError(f"truncation must be >= 0, got {self.length_bound}")
            if self.length_bound < self.margin:
                raise ConfigError(f"truncation {self.length_bound} is below the margin {self.margin}")
        if self.dimension is not None and self.dimension < 0:
            raise ConfigError("dimension must be >= 0")

    def require(self, *names: str):
        for name in names:
            if getattr(self, name) in (None, ''):
                flag = FLAGS.get(name, name).replace('_', '-')
                raise ConfigError(f"command {self.command!r} needs --{flag}")

    def input(self, position: int = 0) -> str:
        if len(self.inputs) <= position:
            raise ConfigError(f"command {self.command!r} needs {position + 1} input file(s)")
        return self.inputs[position]

    def to_dict(self) -> Dict:
        """Echo embedded in reports; the output path is left out so reports are location-free"""
        data = asdict(self)
        data.pop('output')
        data.pop('config_path')
        return data
