"""Disjoint-set forest with path compression and union by size."""


class UnionFind:
    """Disjoint sets over the integers 0 .. n-1."""

    __slots__ = ("parent", "size")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, element: int) -> int:
        parent = self.parent
        root = element
        while parent[root] != root:
            root = parent[root]
        while parent[element] != root:
            parent[element], element = root, parent[element]
        return root

    def union(self, first: int, second: int) -> bool:
        """Merge the sets of first and second; False if already together."""
        a, b = self.find(first), self.find(second)
        if a == b:
            return False
        if self.size[a] < self.size[b]:
            a, b = b, a
        self.parent[b] = a
        self.size[a] += self.size[b]
        return True

    def canonical_labels(self) -> list[int]:
        """Smallest member of each element's set, independent of union order."""
        n = len(self.parent)
        smallest: dict[int, int] = {}
        roots = [self.find(i) for i in range(n)]
        for i, r in enumerate(roots):
            if r not in smallest:
                smallest[r] = i
        return [smallest[r] for r in roots]
