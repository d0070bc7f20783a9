"""Tensor products S ⊗_U S and dominions of finite monoids"""

from typing import Iterable, List, Optional, Tuple, Union

from ..utils.logger import setup_logger
from ..utils.union_find import UnionFind
from .monoid import FiniteMonoid


logger = setup_logger('Tensor')

Element = Union[int, str]


class TensorQuotient:
    """
    S × S modulo the equivalence generated by (au, b) ~ (a, ub), u ∈ U.

    Pairs are encoded as a·n + b; class representatives are the minimum code
    of the class.
    """

    def __init__(self, monoid: FiniteMonoid, submonoid: frozenset, uf: UnionFind):
        self.monoid = monoid
        self.submonoid = submonoid
        self._uf = uf

    def _code(self, a: Element, b: Element) -> int:
        m = self.monoid
        return m.element(a) * m.size + m.element(b)

    def _pair(self, code: int) -> Tuple[int, int]:
        return divmod(code, self.monoid.size)

    def class_of(self, a: Element, b: Element) -> Tuple[int, int]:
        """Canonical representative pair of the class of a ⊗ b"""
        return self._pair(self._uf.find(self._code(a, b)))

    def equal(self, a: Element, b: Element, c: Element, d: Element) -> bool:
        return self._uf.same(self._code(a, b), self._code(c, d))

    def class_count(self) -> int:
        return self._uf.class_count()

    def classes(self) -> List[List[Tuple[int, int]]]:
        return [[self._pair(code) for code in cls] for cls in self._uf.classes()]

    def left_act(self, s: Element, a: Element, b: Element) -> Tuple[int, int]:
        """s · (a ⊗ b) = sa ⊗ b"""
        m = self.monoid
        return self.class_of(m.multiply(m.element(s), m.element(a)), b)

    def right_act(self, a: Element, b: Element, s: Element) -> Tuple[int, int]:
        """(a ⊗ b) · s = a ⊗ bs"""
        m = self.monoid
        return self.class_of(a, m.multiply(m.element(b), m.element(s)))

    def __repr__(self):
        return f"TensorQuotient({self.monoid!r}, |U|={len(self.submonoid)}, classes={self.class_count()})"


def tensor_product(monoid: FiniteMonoid, submonoid: Iterable[Element]) -> TensorQuotient:
    """
    Exact partition of S × S for S ⊗_U S

    Args:
        monoid: S
        submonoid: Elements of U, by index or name

    Returns:
        TensorQuotient

    Raises:
        MonoidTableError: U is not a submonoid
    """
    U = monoid.submonoid(submonoid)
    n = monoid.size
    T = monoid.table
    uf = UnionFind(range(n * n))
    for u in sorted(U):
        for a in range(n):
            au = int(T[a, u])
            for b in range(n):
                uf.union(au * n + b, a * n + int(T[u, b]))
    quotient = TensorQuotient(monoid, U, uf)
    logger.debug(f"{quotient!r}")
    return quotient


def dominion(monoid: FiniteMonoid, submonoid: Iterable[Element],
             quotient: Optional[TensorQuotient] = None) -> frozenset:
    """
    Dom_S(U) = {d : d ⊗ 1 = 1 ⊗ d in S ⊗_U S}

    Args:
        monoid: S
        submonoid: U
        quotient: Optional prebuilt S ⊗_U S

    Returns:
        Frozenset of element indices
    """
    if quotient is None:
        quotient = tensor_product(monoid, submonoid)
    e = monoid.identity
    return frozenset(d for d in range(monoid.size) if quotient.equal(d, e, e, d))


def tensor_class_count(monoid: FiniteMonoid, submonoid: Iterable[Element]) -> int:
    return tensor_product(monoid, submonoid).class_count()


def tensor_equal(quotient: TensorQuotient, a: Element, b: Element, c: Element, d: Element) -> bool:
    """a ⊗ b = c ⊗ d"""
    return quotient.equal(a, b, c, d)
