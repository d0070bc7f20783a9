"""Monoid sources for the CLI: a CSV table or a `catalog:NAME` builder"""

from pathlib import Path
from typing import Union

from ..actions.catalog import catalog_monoid
from ..actions.monoid import FiniteMonoid

CATALOG_PREFIX = 'catalog:'


def load_monoid(source: Union[str, Path]) -> FiniteMonoid:
    """
    Args:
        source: CSV path, or `catalog:S3` and the like

    Raises:
        MonoidTableError: unreadable table, invalid table or unknown catalog name
    """
    text = str(source)
    if text.startswith(CATALOG_PREFIX):
        return catalog_monoid(text[len(CATALOG_PREFIX):])
    return FiniteMonoid.from_csv(source)
