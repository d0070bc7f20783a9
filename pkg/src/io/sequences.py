"""Y-sequence literals: [(u; r; +1), (x y^-1; 2; -1), ...]"""

import re
from pathlib import Path
from typing import List, Union

from ..peiffer.symbols import YSequence, YSymbol
from ..pride.presentation import GroupPresentation
from ..utils.exceptions import AlphabetError, ParseError


_SYMBOL = re.compile(r'\(([^;()]*);([^;()]*);([^;()]*)\)')
_SEPARATOR = re.compile(r'\s*,?\s*')


def _relator_label(text: str, presentation: GroupPresentation, column: int) -> str:
    if presentation.has_relator(text):
        return text
    if text.isdigit() and 1 <= int(text) <= len(presentation):
        return presentation.label_at(int(text))
    raise ParseError(f"unknown relator {text!r}", 1, column)


def _exponent(text: str, column: int) -> int:
    if text in ('+1', '1', '+'):
        return 1
    if text in ('-1', '-'):
        return -1
    raise ParseError(f"exponent must be +1 or -1, got {text!r}", 1, column)


def parse_sequence(text: str, presentation: GroupPresentation) -> YSequence:
    """
    Parse a Y-sequence literal over a group presentation

    The relator of each symbol is a label or a 1-based position; the
    conjugator is a word literal (`1` for the empty word) and is freely reduced.

    Raises:
        ParseError: with the column of the offending part (line is always 1)
    """
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if not (body.startswith('[') and body.endswith(']')):
        raise ParseError("sequence literal must be enclosed in [ ]", 1, offset + 1)
    alphabet = presentation.alphabet
    symbols: List[YSymbol] = []
    position = 1
    inner_end = len(body) - 1
    while position < inner_end:
        sep = _SEPARATOR.match(body, position)
        position = sep.end()
        if position >= inner_end:
            break
        m = _SYMBOL.match(body, position)
        if m is None:
            raise ParseError("expected '(u; r; e)'", 1, offset + position + 1)
        u_text, r_text, e_text = m.group(1), m.group(2), m.group(3)
        try:
            u = alphabet.parse(u_text) if u_text.strip() else ()
        except AlphabetError as exc:
            raise ParseError(str(exc), 1, offset + m.start(1) + 1) from None
        label = _relator_label(r_text.strip(), presentation, offset + m.start(2) + 1)
        eps = _exponent(e_text.strip(), offset + m.start(3) + 1)
        symbols.append(YSymbol(alphabet.free_reduce(u), label, eps))
        position = m.end()
    return tuple(symbols)


def read_sequence(path: Union[str, Path], presentation: GroupPresentation) -> YSequence:
    """Parse the Y-sequence literal stored in a file"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    return parse_sequence(text, presentation)
