"""Disjoint sets with canonical (minimum-element) roots"""

from collections import defaultdict


class UnionFind:
    """
    Disjoint-set forest with path compression.

    The root of every class is its smallest member, so `find` answers do not
    depend on the order in which unions were made.

    Examples
    --------
    >>> uf = UnionFind()
    >>> uf.union(3, 2)
    >>> uf.union(5, 3)
    >>> uf.find(5)
    2
    """

    def __init__(self, elements=()):
        self.parent = {}
        for x in elements:
            self.parent[x] = x

    def add(self, x):
        self.parent.setdefault(x, x)

    def __contains__(self, x):
        return x in self.parent

    def __len__(self):
        return len(self.parent)

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        root = x
        while parent[root] != root:
            root = parent[root]
        # path compression
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x, y):
        px = self.find(x)
        py = self.find(y)
        if px == py:
            return
        if py < px:
            px, py = py, px
        self.parent[py] = px

    def same(self, x, y):
        return self.find(x) == self.find(y)

    def classes(self):
        """Classes as sorted lists, ordered by their root"""
        groups = defaultdict(list)
        for x in self.parent:
            groups[self.find(x)].append(x)
        return [sorted(groups[root]) for root in sorted(groups)]

    def class_count(self):
        return sum(1 for x in self.parent if self.find(x) == x)
