"""
Finitely generated additive subgroups of R with generators in Q(sqrt 2).

A Scalar a + b√2 is the rational vector (a, b). Clearing denominators
turns the generators into integer vectors whose Z-span has an echelon
basis (g, y), (0, h) computed by Euclid's algorithm. The subgroup is
zero, cyclic or dense according to how many basis vectors are nonzero,
and membership is an integrality check against the basis.
"""
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from math import gcd, lcm
from typing import Iterable

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import Scalar
from relsim.modules.scalar.field import ScalarLike


class SubgroupKind(str, Enum):
    ZERO = "zero"
    CYCLIC = "cyclic"
    GENERATED = "generated"
    FULL = "full"


class SubgroupClass(str, Enum):
    ZERO = "zero"
    CYCLIC = "cyclic"
    DENSE = "dense"
    FULL = "full"


@dataclass(frozen=True)
class Classification:
    kind: SubgroupClass
    generator: Scalar | None = None

    def __str__(self) -> str:
        if self.kind is SubgroupClass.CYCLIC:
            return f"cyclic({self.generator})"
        return self.kind.value


@dataclass(frozen=True)
class _Basis:
    """Echelon basis of the span, scaled by 1/denominator."""

    denominator: int
    first: tuple[int, int] | None  # (g, y) with g > 0
    second: int  # h >= 0, the vector (0, h)

    @property
    def rank(self) -> int:
        return (self.first is not None) + (self.second != 0)


def _echelon(vectors: list[tuple[int, int]]) -> tuple[tuple[int, int] | None, int]:
    work = [v for v in vectors if v != (0, 0)]
    pivot = None
    while True:
        active = [v for v in work if v[0] != 0]
        if len(active) <= 1:
            pivot = active[0] if active else None
            break
        p = min(active, key=lambda v: abs(v[0]))
        reduced = []
        for v in work:
            if v is p or v[0] == 0:
                reduced.append(v)
            else:
                k = v[0] // p[0]
                reduced.append((v[0] - k * p[0], v[1] - k * p[1]))
        work = [v for v in reduced if v != (0, 0)]
    h = 0
    for v in work:
        if v is not pivot and v[0] == 0:
            h = gcd(h, v[1])
    if pivot is not None:
        if pivot[0] < 0:
            pivot = (-pivot[0], -pivot[1])
        if h:
            pivot = (pivot[0], pivot[1] % h)
    return pivot, h


@dataclass(frozen=True)
class RealSubgroupSpec:
    """
    Zero, Cyclic(a) with a > 0, Generated(gens) or Full.

    Use the ``zero``/``cyclic``/``generated``/``full`` factories; zero
    generators are stripped and an empty list becomes Zero.
    """

    kind: SubgroupKind
    gens: tuple[Scalar, ...] = field(default=())

    def __post_init__(self):
        if self.kind is SubgroupKind.CYCLIC:
            if len(self.gens) != 1 or self.gens[0].sign() <= 0:
                raise PreconditionError("Cyclic needs one strictly positive generator")
        elif self.kind is SubgroupKind.GENERATED:
            if not self.gens or any(not g for g in self.gens):
                raise PreconditionError("Generated needs a nonempty list of nonzero generators")
        elif self.gens:
            raise PreconditionError(f"{self.kind.value} takes no generators")

    @classmethod
    def zero(cls) -> "RealSubgroupSpec":
        return cls(SubgroupKind.ZERO)

    @classmethod
    def full(cls) -> "RealSubgroupSpec":
        return cls(SubgroupKind.FULL)

    @classmethod
    def cyclic(cls, a: ScalarLike) -> "RealSubgroupSpec":
        return cls(SubgroupKind.CYCLIC, (Scalar.coerce(a),))

    @classmethod
    def generated(cls, gens: Iterable[ScalarLike]) -> "RealSubgroupSpec":
        kept = tuple(g for g in (Scalar.coerce(x) for x in gens) if g)
        return cls(SubgroupKind.GENERATED, kept) if kept else cls.zero()

    @cached_property
    def _basis(self) -> _Basis:
        den = lcm(*(x.denominator for g in self.gens for x in (g.a, g.b))) if self.gens else 1
        vectors = [(int(g.a * den), int(g.b * den)) for g in self.gens]
        first, second = _echelon(vectors)
        return _Basis(den, first, second)

    def __str__(self) -> str:
        return format_subgroup(self)


def classify_subgroup(s: RealSubgroupSpec) -> Classification:
    if s.kind is SubgroupKind.ZERO:
        return Classification(SubgroupClass.ZERO)
    if s.kind is SubgroupKind.FULL:
        return Classification(SubgroupClass.FULL)
    if s.kind is SubgroupKind.CYCLIC:
        return Classification(SubgroupClass.CYCLIC, s.gens[0])
    basis = s._basis
    if basis.rank == 2:
        return Classification(SubgroupClass.DENSE)
    if basis.rank == 0:
        return Classification(SubgroupClass.ZERO)
    den = basis.denominator
    if basis.first is not None:
        g, y = basis.first
        generator = Scalar(Fraction(g, den), Fraction(y, den))
    else:
        generator = Scalar(0, Fraction(basis.second, den))
    return Classification(SubgroupClass.CYCLIC, abs(generator))


def subgroup_contains(s: RealSubgroupSpec, h: ScalarLike) -> bool:
    h = Scalar.coerce(h)
    if s.kind is SubgroupKind.ZERO:
        return not h
    if s.kind is SubgroupKind.FULL:
        return True
    if s.kind is SubgroupKind.CYCLIC:
        return (h / s.gens[0]).is_integer()
    basis = s._basis
    x, y = h.a * basis.denominator, h.b * basis.denominator
    if x.denominator != 1 or y.denominator != 1:
        return False
    x, y = int(x), int(y)
    if basis.first is not None:
        g, gy = basis.first
        if x % g:
            return False
        y -= (x // g) * gy
    elif x:
        return False
    return y == 0 if basis.second == 0 else y % basis.second == 0


# ── text form: zero | full | cyclic:<S> | gen:<S>;<S>;... ─────────────────

def format_subgroup(s: RealSubgroupSpec) -> str:
    if s.kind is SubgroupKind.CYCLIC:
        return "cyclic:" + _compact(s.gens[0])
    if s.kind is SubgroupKind.GENERATED:
        return "gen:" + ";".join(_compact(g) for g in s.gens)
    return s.kind.value


def _compact(x: Scalar) -> str:
    return str(x).replace(" ", "")
