"""Trace steps for Peiffer searches"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .symbols import YSymbol


LEFT = 'left'
RIGHT = 'right'

EXCHANGE = 'exchange'
DELETE = 'delete'
INSERT = 'insert'
# removal of a central 𝔘-generator from a word over Y ∪ Y⁻¹
EXTRACT = 'extract'


@dataclass(frozen=True)
class PeifferStep:
    """One operation of a trace; `symbol` is set for insertions only"""

    kind: str
    index: int
    direction: Optional[str] = None
    symbol: Optional[YSymbol] = None

    def to_dict(self):
        out = {'op': self.kind, 'index': self.index}
        if self.direction is not None:
            out['direction'] = self.direction
        if self.symbol is not None:
            out['symbol'] = str(self.symbol)
        return out

    def __str__(self):
        if self.kind == EXCHANGE:
            return f"exchange {self.direction} at {self.index}"
        if self.kind == INSERT:
            return f"insert {self.symbol} at {self.index}"
        return f"{self.kind} at {self.index}"


Trace = Tuple[PeifferStep, ...]


def exchange_step(i: int, direction: str = LEFT) -> PeifferStep:
    return PeifferStep(EXCHANGE, i, direction)


def delete_step(i: int) -> PeifferStep:
    return PeifferStep(DELETE, i)


def insert_step(i: int, symbol: YSymbol) -> PeifferStep:
    return PeifferStep(INSERT, i, symbol=symbol)


def extract_step(i: int) -> PeifferStep:
    return PeifferStep(EXTRACT, i)


def trace_to_dicts(trace):
    return [step.to_dict() for step in trace]
