"""1-chain files: {"cycle": [{"left": W, "rule": ID, "right": W, "coef": n}, ...]}"""

import json
from pathlib import Path
from typing import Dict, List, Union

from ..rewriting import Edge, RewritingSystem
from ..squier.chains import Chain
from ..utils.exceptions import AlphabetError, ParseError, SquierLabError
from ..words import Alphabet


def chain_from_dict(data: Dict, system: RewritingSystem) -> Chain:
    """
    Build a 1-chain on positive edges of `system`

    Entries may carry "sign": -1, which counts the edge with the opposite sign.

    Raises:
        ParseError: missing keys, unknown rules or letters
    """
    if not isinstance(data, dict) or not isinstance(data.get('cycle'), list):
        raise ParseError("expected an object with a 'cycle' list")
    chain = Chain(1)
    for i, entry in enumerate(data['cycle']):
        try:
            rule = system.rule(entry['rule'])
            left = system.alphabet.parse(entry.get('left', '1'))
            right = system.alphabet.parse(entry.get('right', '1'))
            coef = int(entry.get('coef', 1))
            sign = int(entry.get('sign', 1))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"cycle entry {i}: bad or missing field {exc}") from None
        except (AlphabetError, SquierLabError) as exc:
            raise ParseError(f"cycle entry {i}: {exc}") from None
        if sign not in (1, -1):
            raise ParseError(f"cycle entry {i}: sign must be +1 or -1")
        chain.add_term(Edge(left, rule, 1, right), sign * coef)
    return chain


def parse_cycle(path: Union[str, Path], system: RewritingSystem) -> Chain:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    return chain_from_dict(data, system)


def chain_to_dict(chain: Chain) -> Dict[str, List[Dict]]:
    """Inverse of `chain_from_dict` for 1-chains, entries in a stable order"""
    entries = []
    for edge, coef in chain.items():
        entries.append({'left': Alphabet.format(edge.left), 'rule': edge.rule.id,
                        'right': Alphabet.format(edge.right), 'coef': coef})
    entries.sort(key=lambda d: (d['left'], d['rule'], d['right']))
    return {'cycle': entries}
