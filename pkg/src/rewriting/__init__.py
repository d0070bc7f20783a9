"""
Rewriting Module
Rules, reduction, Thue search, critical pairs and Knuth-Bendix completion
"""

from .system import Rule, RewritingSystem
from .edges import Edge, Path, endpoints, compose
from .reduction import (
    Rewrite,
    single_step_rewrites,
    reduction_edges,
    is_irreducible,
    normalize,
    normalize_path,
    NormalFormExplorer,
)
from .thue import Equivalent, NotFoundWithinBound, thue_oracle, congruence_classes
from .critical_pairs import (
    PairKind,
    CriticalPair,
    Resolvable,
    Unresolved,
    Unknown,
    ConfluentOnBound,
    CounterexampleFound,
    critical_pairs,
    is_resolvable,
    is_complete,
    newman_confluence_check,
)
from .completion import CompletionStatus, CompletionResult, KnuthBendix, knuth_bendix
from .normal_forms import (
    NormalFormProvider,
    CompletedSystemNormalForms,
    TrivialGroupNormalForms,
    FreeGroupNormalForms,
    MonoidTableNormalForms,
    congruence_oracle,
)

__all__ = [
    'Rule', 'RewritingSystem', 'Edge', 'Path', 'endpoints', 'compose',
    'Rewrite', 'single_step_rewrites', 'reduction_edges', 'is_irreducible',
    'normalize', 'normalize_path', 'NormalFormExplorer',
    'Equivalent', 'NotFoundWithinBound', 'thue_oracle', 'congruence_classes',
    'PairKind', 'CriticalPair', 'Resolvable', 'Unresolved', 'Unknown',
    'ConfluentOnBound', 'CounterexampleFound', 'critical_pairs', 'is_resolvable',
    'is_complete', 'newman_confluence_check',
    'CompletionStatus', 'CompletionResult', 'KnuthBendix', 'knuth_bendix',
    'NormalFormProvider', 'CompletedSystemNormalForms', 'TrivialGroupNormalForms',
    'FreeGroupNormalForms', 'MonoidTableNormalForms', 'congruence_oracle',
]
