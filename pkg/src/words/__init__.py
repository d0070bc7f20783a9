"""
Words Module
Alphabets, free-monoid words, free reduction and the length-lexicographic order
"""

from .alphabet import (
    Alphabet,
    Word,
    EMPTY,
    concat,
    free_reduce,
    formal_inverse,
    llex_compare,
)
from .ordering import Ordering

__all__ = [
    'Alphabet', 'Word', 'EMPTY', 'Ordering',
    'concat', 'free_reduce', 'formal_inverse', 'llex_compare',
]
