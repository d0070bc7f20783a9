"""Shared fixtures"""

import sys
from pathlib import Path

import pytest

# Add repo root to path
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.pride import GroupPresentation
from src.rewriting import RewritingSystem
from src.words import Alphabet


CORPUS = Path(__file__).parent.parent / 'data' / 'corpus'


@pytest.fixture
def corpus():
    return CORPUS


@pytest.fixture
def c3_alphabet():
    return Alphabet(['a', 'A'], {'a': 'A'})


@pytest.fixture
def c3_system(c3_alphabet):
    """{aaa -> 1, aA -> 1, Aa -> 1}"""
    return RewritingSystem.from_pairs(c3_alphabet, [
        (('a', 'a', 'a'), ()),
        (('a', 'A'), ()),
        (('A', 'a'), ()),
    ], name='c3')


@pytest.fixture
def trivial_x():
    return GroupPresentation.parse(['x'], ['x'], distinguished=1, name='trivial_x')


@pytest.fixture
def xy_trivial():
    return GroupPresentation.parse(['x', 'y'], ['x', 'y'], distinguished=2, name='xy_trivial')


@pytest.fixture
def x_cubed():
    return GroupPresentation.parse(['x'], ['x x x'], name='x_cubed')
