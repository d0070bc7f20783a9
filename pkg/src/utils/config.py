"""YAML configuration loading"""

import copy
from pathlib import Path

import yaml


DEFAULT_CONFIG_PATH = Path(__file__).resolve().parent.parent.parent / 'config' / 'defaults.yaml'

# Used when config/defaults.yaml is missing (e.g. an installed copy of src/)
FALLBACK_DEFAULTS = {
    'rewriting': {
        'step_limit': 10000,
        'length_bound': 12,
        'max_rules': 200,
        'max_lhs_len': 12,
        'interreduce': True,
        'thue_step_bound': 20000,
    },
    'complex': {'max_cells': 2000000, 'margin': 2},
    'peiffer': {'max_steps': 64, 'max_states': 50000, 'max_len': 8},
    'actions': {'subgroup_bound': 12},
    'progress': {'enabled': False},
    'logging': {'level': 'WARNING'},
}


def deep_merge(base, override):
    """
    Recursively merge `override` into a copy of `base`

    Args:
        base: Base dict
        override: Dict whose values win

    Returns:
        New merged dict
    """
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = deep_merge(merged[key], value)
        else:
            merged[key] = copy.deepcopy(value)
    return merged


def load_yaml(path):
    with open(path, 'r', encoding='utf-8') as f:
        data = yaml.safe_load(f)
    return data or {}


def load_config(path=None, overrides=None):
    """
    Load defaults, then a user file, then explicit overrides

    Args:
        path: Optional YAML file with user settings
        overrides: Optional dict applied last

    Returns:
        Merged configuration dict
    """
    if DEFAULT_CONFIG_PATH.exists():
        config = deep_merge(FALLBACK_DEFAULTS, load_yaml(DEFAULT_CONFIG_PATH))
    else:
        config = copy.deepcopy(FALLBACK_DEFAULTS)
    if path is not None:
        config = deep_merge(config, load_yaml(path))
    return deep_merge(config, overrides)
