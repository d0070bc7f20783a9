"""
Presentation files (format: presentation/v1)

    # the trivial group on one generator
    format: presentation/v1
    kind: group
    name: trivial_x
    generators: x
    relators:
      r1: x
    distinguished: r1

Monoid files use `letters`, an optional `order`, an optional `inverses`
(`a:A b:B`) and a `rules` block of `[id:] lhs -> rhs` lines. Block entries are
indented. `1` is the empty word. `#` starts a comment.
"""

import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..pride.presentation import GroupPresentation
from ..rewriting import Rule, RewritingSystem
from ..utils.exceptions import AlphabetError, ParseError, PresentationError, RuleError
from ..utils.logger import setup_logger
from ..words import Alphabet, Word
from ..words.alphabet import EMPTY_TOKEN, INVERSE_SUFFIX


logger = setup_logger('PresentationParser')

FORMAT = 'presentation/v1'
KINDS = ('group', 'monoid')
HEADER_KEYS = ('format', 'kind', 'name', 'generators', 'letters', 'order', 'inverses',
               'relators', 'rules', 'distinguished')
BLOCK_KEYS = ('relators', 'rules')
ARROW = '->'

_TOKEN = re.compile(r'\S+')
_LABELLED = re.compile(r'^([^\s:]+)\s*:(.*)$')

Parsed = Union[GroupPresentation, RewritingSystem]


class _Line:
    """A source line with its 1-based number and comment stripped"""

    __slots__ = ('number', 'raw', 'text')

    def __init__(self, number: int, raw: str):
        self.number = number
        self.raw = raw
        self.text = raw.split('#', 1)[0].rstrip()

    def column_of(self, offset_text: str, start: int = 0) -> int:
        found = self.raw.find(offset_text, start)
        return (found if found >= 0 else start) + 1

    def error(self, message: str, column: int = 1) -> ParseError:
        return ParseError(message, self.number, column)


def _tokens(line: _Line, text: str, start: int) -> List[Tuple[str, int]]:
    """Tokens of `text` (found at offset `start` of the line) with 1-based columns"""
    return [(m.group(), start + m.start() + 1) for m in _TOKEN.finditer(text)]


def _word(line: _Line, text: str, start: int, alphabet: Alphabet) -> Word:
    tokens = _tokens(line, text, start)
    if not tokens:
        raise line.error("missing word", start + 1)
    if [t for t, _ in tokens] == [EMPTY_TOKEN]:
        return ()
    out = []
    for token, column in tokens:
        if token in alphabet:
            out.append(token)
            continue
        base = token[:-len(INVERSE_SUFFIX)] if token.endswith(INVERSE_SUFFIX) else None
        if base is not None and base in alphabet and alphabet.has_pairing:
            out.append(alphabet.inverse_letter(base))
            continue
        raise line.error(f"unknown letter {token!r}", column)
    return tuple(out)


def _split_header(lines: List[_Line]):
    """key -> (line, value) for header keys and key -> [lines] for blocks"""
    header: Dict[str, Tuple[_Line, str]] = {}
    blocks: Dict[str, List[_Line]] = {}
    current = None
    for line in lines:
        if not line.text.strip():
            continue
        if line.text[0].isspace():
            if current is None:
                raise line.error("indented line outside a block", line.column_of(line.text.strip()))
            blocks[current].append(line)
            continue
        key, sep, value = line.text.partition(':')
        key = key.strip()
        if not sep:
            raise line.error(f"expected 'key: value', got {line.text.strip()!r}")
        if key not in HEADER_KEYS:
            raise line.error(f"unknown header key {key!r}")
        if key in header or key in blocks:
            raise line.error(f"repeated header key {key!r}")
        if key in BLOCK_KEYS:
            if value.strip():
                raise line.error(f"block {key!r} takes indented entries", len(key) + 2)
            blocks[key] = []
            current = key
        else:
            header[key] = (line, value.strip())
            current = None
    return header, blocks


def _labelled(line: _Line) -> Tuple[Optional[str], str, int]:
    """Optional `label:` prefix, the rest, and the offset where the rest starts"""
    stripped = line.text.lstrip()
    start = len(line.text) - len(stripped)
    m = _LABELLED.match(stripped)
    if m and ARROW not in m.group(1):
        return m.group(1), m.group(2), start + m.start(2)
    return None, stripped, start


def _blame(exc, labelled_lines) -> ParseError:
    """ParseError at the line of the entry the message names first (the later one on ties)"""
    message = str(exc)
    best = None
    for label, line in labelled_lines:
        position = message.find(repr(label))
        if position >= 0 and (best is None or position <= best[0]):
            best = (position, line)
    if best is None:
        return ParseError(message)
    return best[1].error(message)


def _parse_group(header, blocks, name) -> GroupPresentation:
    if 'generators' not in header:
        raise ParseError("group file needs a 'generators' line", 1, 1)
    gen_line, gen_text = header['generators']
    generators = gen_text.split()
    try:
        alphabet = Alphabet.free_group(generators)
    except AlphabetError as exc:
        raise gen_line.error(str(exc), gen_line.column_of(gen_text)) from None

    relators = []
    for i, line in enumerate(blocks.get('relators', []), 1):
        label, text, start = _labelled(line)
        word = _word(line, text, start, alphabet)
        if not word:
            raise line.error("empty relator", start + 1)
        relators.append((label or f"r{i}", word, line))

    distinguished = None
    if 'distinguished' in header:
        d_line, d_text = header['distinguished']
        labels = [label for label, _, _ in relators]
        if d_text in labels:
            distinguished = d_text
        elif d_text.isdigit() and 1 <= int(d_text) <= len(labels):
            distinguished = labels[int(d_text) - 1]
        else:
            raise d_line.error(f"distinguished relator {d_text!r} is not a relator",
                               d_line.column_of(d_text))
    try:
        return GroupPresentation(generators, [(label, w) for label, w, _ in relators],
                                 distinguished=distinguished, name=name)
    except PresentationError as exc:
        raise _blame(exc, [(label, line) for label, _, line in relators]) from None


def _parse_monoid(header, blocks, name) -> RewritingSystem:
    if 'letters' not in header:
        raise ParseError("monoid file needs a 'letters' line", 1, 1)
    letters_line, letters_text = header['letters']
    letters = letters_text.split()

    pairing = None
    if 'inverses' in header:
        inv_line, inv_text = header['inverses']
        pairing = {}
        for token, column in _tokens(inv_line, inv_text, inv_line.column_of(inv_text) - 1):
            a, sep, b = token.partition(':')
            if not sep or not a or not b:
                raise inv_line.error(f"expected 'a:A', got {token!r}", column)
            pairing[a] = b
    order = None
    if 'order' in header:
        order = header['order'][1].split()
    try:
        alphabet = Alphabet(letters, pairing, order)
    except AlphabetError as exc:
        raise letters_line.error(str(exc), letters_line.column_of(letters_text)) from None

    rules = []
    for i, line in enumerate(blocks.get('rules', []), 1):
        label, text, start = _labelled(line)
        lhs_text, sep, rhs_text = text.partition(ARROW)
        if not sep:
            raise line.error(f"expected 'lhs {ARROW} rhs'", start + 1)
        lhs = _word(line, lhs_text, start, alphabet)
        rhs = _word(line, rhs_text, start + len(lhs_text) + len(ARROW), alphabet)
        if not lhs:
            raise line.error("empty left-hand side", start + 1)
        rules.append((Rule(label or f"r{i}", lhs, rhs), line))
    try:
        return RewritingSystem(alphabet, [rule for rule, _ in rules], name=name)
    except RuleError as exc:
        raise _blame(exc, [(rule.id, line) for rule, line in rules]) from None


def parse_presentation_text(text: str, name: Optional[str] = None) -> Parsed:
    """
    Parse the contents of a presentation file

    Args:
        text: File contents
        name: Fallback name when the file has no 'name' line

    Returns:
        GroupPresentation for kind 'group', RewritingSystem for kind 'monoid'

    Raises:
        ParseError: with the offending line and column
    """
    lines = [_Line(i, raw) for i, raw in enumerate(text.splitlines(), 1)]
    header, blocks = _split_header(lines)

    if 'format' not in header:
        raise ParseError(f"missing 'format: {FORMAT}' header", 1, 1)
    fmt_line, fmt = header['format']
    if fmt != FORMAT:
        raise fmt_line.error(f"unsupported format {fmt!r}", fmt_line.column_of(fmt))
    if 'kind' not in header:
        raise ParseError("missing 'kind' header", fmt_line.number, 1)
    kind_line, kind = header['kind']
    if kind not in KINDS:
        raise kind_line.error(f"kind must be one of {KINDS}, got {kind!r}", kind_line.column_of(kind))
    if 'name' in header:
        name = header['name'][1]

    wrong = ('letters', 'order', 'inverses', 'rules') if kind == 'group' else \
        ('generators', 'relators', 'distinguished')
    for key in wrong:
        if key in header or key in blocks:
            line = header[key][0] if key in header else None
            raise ParseError(f"{key!r} does not apply to kind {kind!r}",
                             line.number if line else None, 1 if line else None)

    if kind == 'group':
        return _parse_group(header, blocks, name)
    return _parse_monoid(header, blocks, name)


def parse_presentation(path: Union[str, Path]) -> Parsed:
    """Read a presentation file; see `parse_presentation_text`"""
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    parsed = parse_presentation_text(text, name=path.stem)
    logger.info(f"Parsed {path.name}: {parsed!r}")
    return parsed


def serialize_presentation(obj: Parsed) -> str:
    """Canonical file text; parsing it gives back an equal object"""
    out = [f"format: {FORMAT}"]
    if isinstance(obj, GroupPresentation):
        out.append('kind: group')
        if obj.name:
            out.append(f"name: {obj.name}")
        out.append(f"generators: {' '.join(obj.generators)}")
        out.append('relators:')
        out.extend(f"  {label}: {Alphabet.format(w)}" for label, w in obj.relators)
        if obj.distinguished is not None:
            out.append(f"distinguished: {obj.distinguished}")
    else:
        alphabet = obj.alphabet
        out.append('kind: monoid')
        if obj.name:
            out.append(f"name: {obj.name}")
        out.append(f"letters: {' '.join(alphabet.letters)}")
        if alphabet.has_pairing:
            pairing = alphabet.pairing()
            pairs, seen = [], set()
            for x in alphabet.letters:
                if x not in seen:
                    pairs.append(f"{x}:{pairing[x]}")
                    seen.update((x, pairing[x]))
            out.append(f"inverses: {' '.join(pairs)}")
        out.append('rules:')
        out.extend(f"  {rule.id}: {rule}" for rule in obj)
    return '\n'.join(out) + '\n'
