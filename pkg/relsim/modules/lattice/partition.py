"""
Finite partitions: the lattice E(X) of equivalence relations on an EventSet.

A FinitePartition is stored as canonical labels: label[i] is the smallest
index in the block of i. Labels never depend on the order in which pairs
were merged, so equality and reports are reproducible.
"""
from typing import Iterable, Sequence

from relsim.core.errors import BaseMismatchError, PreconditionError
from .events import EventSet
from .union_find import UnionFind


class FinitePartition:
    __slots__ = ("base", "labels")

    def __init__(self, base: EventSet, labels: Sequence[int]):
        if len(labels) != len(base):
            raise PreconditionError("label vector does not match the event set")
        self.base = base
        self.labels: tuple[int, ...] = tuple(labels)

    # ── constructors ───────────────────────────────────────────────────

    @classmethod
    def from_union_find(cls, base: EventSet, uf: UnionFind) -> "FinitePartition":
        return cls(base, uf.canonical_labels())

    @classmethod
    def from_pairs(cls, base: EventSet, pairs: Iterable[tuple[int, int]]) -> "FinitePartition":
        """Equivalence generated by index pairs (reflexive closure implied)."""
        uf = UnionFind(len(base))
        for i, j in pairs:
            uf.union(i, j)
        return cls.from_union_find(base, uf)

    @classmethod
    def from_blocks(cls, base: EventSet, blocks: Iterable[Iterable[int]]) -> "FinitePartition":
        uf = UnionFind(len(base))
        for block in blocks:
            block = list(block)
            for j in block[1:]:
                uf.union(block[0], j)
        return cls.from_union_find(base, uf)

    def union_find(self) -> UnionFind:
        uf = UnionFind(len(self.base))
        for i, rep in enumerate(self.labels):
            if rep != i:
                uf.union(rep, i)
        return uf

    # ── queries ────────────────────────────────────────────────────────

    def related(self, i: int, j: int) -> bool:
        return self.labels[i] == self.labels[j]

    def blocks(self) -> list[list[int]]:
        """Blocks as sorted index lists, ordered by smallest member."""
        out: dict[int, list[int]] = {}
        for i, rep in enumerate(self.labels):
            out.setdefault(rep, []).append(i)
        return list(out.values())

    def id_blocks(self) -> list[list[str]]:
        return [[self.base.ids[i] for i in block] for block in self.blocks()]

    @property
    def block_count(self) -> int:
        return sum(1 for i, rep in enumerate(self.labels) if i == rep)

    def is_bottom(self) -> bool:
        return all(i == rep for i, rep in enumerate(self.labels))

    def is_top(self) -> bool:
        return all(rep == 0 for rep in self.labels)

    def related_pairs(self) -> Iterable[tuple[int, int]]:
        """All pairs i < j in the same block."""
        for block in self.blocks():
            for a in range(len(block)):
                for b in range(a + 1, len(block)):
                    yield block[a], block[b]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FinitePartition):
            return NotImplemented
        return (self.base is other.base or self.base == other.base) and self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"FinitePartition({self.id_blocks()})"

    # ── lattice operations ─────────────────────────────────────────────

    def __and__(self, other: "FinitePartition") -> "FinitePartition":
        return meet(self, other)

    def __or__(self, other: "FinitePartition") -> "FinitePartition":
        return join(self, other)

    def __le__(self, other: "FinitePartition") -> bool:
        return finer_than(self, other)


def bottom(X: EventSet) -> FinitePartition:
    """The diagonal I: all singletons."""
    return FinitePartition(X, range(len(X)))


def top(X: EventSet) -> FinitePartition:
    """The total relation T: a single block."""
    return FinitePartition(X, [0] * len(X))


def _same_base(r1: FinitePartition, r2: FinitePartition) -> None:
    if r1.base is not r2.base and r1.base != r2.base:
        raise BaseMismatchError(
            f"partitions over different event sets ({r1.base.name!r}, {r2.base.name!r})"
        )


def meet(r1: FinitePartition, r2: FinitePartition) -> FinitePartition:
    """Common refinement: related iff related in both."""
    _same_base(r1, r2)
    first: dict[tuple[int, int], int] = {}
    labels = []
    for i, key in enumerate(zip(r1.labels, r2.labels)):
        labels.append(first.setdefault(key, i))
    return FinitePartition(r1.base, labels)


def join(r1: FinitePartition, r2: FinitePartition) -> FinitePartition:
    """Finest partition coarser than both (transitive closure of the union)."""
    _same_base(r1, r2)
    uf = r1.union_find()
    for i, rep in enumerate(r2.labels):
        if rep != i:
            uf.union(rep, i)
    return FinitePartition.from_union_find(r1.base, uf)


def finer_than(r1: FinitePartition, r2: FinitePartition) -> bool:
    """Every block of r1 lies inside a block of r2."""
    _same_base(r1, r2)
    return all(r2.labels[i] == r2.labels[rep] for i, rep in enumerate(r1.labels))
