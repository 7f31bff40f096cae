"""
Intensional equivalence relations on R^4.

Each RelationSpec decides p ~ q exactly. Deciding goes through a
per-event profile so that restricting a spec to n events costs n profile
computations plus cheap pairwise comparisons.
"""
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any

from relsim.config import settings
from relsim.core.errors import PreconditionError
from relsim.modules.groups import Affine4
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.scalar.field import ScalarLike
from relsim.modules.spacetime import (
    UNIT_METRIC,
    ZERO_VEC,
    Event,
    MetricParams,
    Vec4,
    lorentz_form,
    norm3_sq,
    require_future_timelike,
)
from .subgroups import RealSubgroupSpec, subgroup_contains


class Status(str, Enum):
    DECIDED = "decided"
    BOUND_EXHAUSTED = "bound-exhausted"


@dataclass(frozen=True)
class Verdict:
    value: bool
    status: Status = Status.DECIDED

    @property
    def decided(self) -> bool:
        return self.status is Status.DECIDED


TRUE = Verdict(True)
FALSE = Verdict(False)
UNDECIDED = Verdict(False, Status.BOUND_EXHAUSTED)


def _verdict(value: bool) -> Verdict:
    return TRUE if value else FALSE


class RelationSpec:
    """Base class; subclasses are frozen dataclasses."""

    name = "relation"

    def profile(self, p: Event) -> Any:
        return p

    def compare(self, a: Any, b: Any) -> Verdict:
        raise NotImplementedError

    def related(self, p: Event, q: Event) -> Verdict:
        return self.compare(self.profile(p), self.profile(q))


@dataclass(frozen=True)
class Total(RelationSpec):
    name = "total"

    def profile(self, p: Event) -> None:
        return None

    def compare(self, a, b) -> Verdict:
        return TRUE


@dataclass(frozen=True)
class Identity(RelationSpec):
    name = "identity"

    def compare(self, a: Event, b: Event) -> Verdict:
        return _verdict(a == b)


@dataclass(frozen=True)
class NewtonTypeI(RelationSpec):
    """Classes x + ({0} × H): same place, time differences in H."""

    H: RealSubgroupSpec
    name = "newton1"

    def compare(self, a: Event, b: Event) -> Verdict:
        d = b - a
        return _verdict(not any(d.spatial) and subgroup_contains(self.H, d.time))


@dataclass(frozen=True)
class NewtonTypeII(RelationSpec):
    """Classes x + (R³ × H): time differences in H."""

    H: RealSubgroupSpec
    name = "newton2"

    def profile(self, p: Event) -> Scalar:
        return p.time

    def compare(self, a: Scalar, b: Scalar) -> Verdict:
        return _verdict(subgroup_contains(self.H, b - a))


@dataclass(frozen=True)
class _Pencil(RelationSpec):
    u: Vec4
    H: RealSubgroupSpec
    m: MetricParams = UNIT_METRIC

    def __post_init__(self):
        require_future_timelike(self.u, self.m)

    @cached_property
    def _norm(self) -> Scalar:
        return lorentz_form(self.u, self.u, self.m)

    def profile(self, p: Event) -> tuple[Scalar, Event]:
        # coefficient of u in the g-orthogonal decomposition of p - o
        return lorentz_form(p.position, self.u, self.m) / self._norm, p

    def alpha(self, p: Event, q: Event) -> Scalar:
        """α with q - p = αu + w, w g-orthogonal to u."""
        return lorentz_form(q - p, self.u, self.m) / self._norm


@dataclass(frozen=True)
class PencilTypeI(_Pencil):
    """Classes x + Hu: points of one worldline of the pencil Γ(u)."""

    name = "pencil1"

    def compare(self, a, b) -> Verdict:
        alpha = b[0] - a[0]
        return _verdict(b[1] - a[1] == self.u * alpha and subgroup_contains(self.H, alpha))


@dataclass(frozen=True)
class PencilTypeII(_Pencil):
    """Classes x + (⟨u⟩⊥ + Hu)."""

    name = "pencil2"

    def profile(self, p: Event) -> Scalar:
        return lorentz_form(p.position, self.u, self.m) / self._norm

    def compare(self, a: Scalar, b: Scalar) -> Verdict:
        return _verdict(subgroup_contains(self.H, b - a))


@dataclass(frozen=True)
class StandardSim(RelationSpec):
    """R_u: x ~ y iff x - y is g-orthogonal to u."""

    u: Vec4
    m: MetricParams = UNIT_METRIC
    name = "stdsim"

    def __post_init__(self):
        require_future_timelike(self.u, self.m)

    def profile(self, p: Event) -> Scalar:
        return lorentz_form(p.position, self.u, self.m)

    def compare(self, a: Scalar, b: Scalar) -> Verdict:
        return _verdict(a == b)


class ConeSign(str, Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class HalfCone(RelationSpec):
    """
    Classes are the half-cones of aperture ĉ with apexes on ℓ = o + R·e4.

    For sign + the class of x is the upper half-cone through x, whose apex
    has time x4 - |x̄|/ĉ; for sign - the lower one, apex time x4 + |x̄|/ĉ.
    Two events are related iff their apexes coincide, decided without
    square roots from |x̄|² and ĉ·x4.
    """

    c_hat: Scalar
    sign: ConeSign = ConeSign.PLUS
    name = "halfcone"

    def __post_init__(self):
        object.__setattr__(self, "c_hat", Scalar.coerce(self.c_hat))
        object.__setattr__(self, "sign", ConeSign(self.sign))
        if self.c_hat.sign() <= 0:
            raise PreconditionError(f"half-cone aperture must be > 0, got {self.c_hat}")

    def profile(self, p: Event) -> tuple[Scalar, Scalar]:
        scaled_time = self.c_hat * p.time
        if self.sign is ConeSign.MINUS:
            scaled_time = -scaled_time
        return scaled_time, norm3_sq(p.spatial)

    def compare(self, a, b) -> Verdict:
        # apexes agree iff |q̄| - |p̄| = δ
        delta = b[0] - a[0]
        p_sq, q_sq = a[1], b[1]
        if not delta:
            return _verdict(p_sq == q_sq)
        r = (q_sq - p_sq - delta * delta) / (2 * delta)
        return _verdict(r.sign() >= 0 and (r + delta).sign() >= 0 and r * r == p_sq)


@dataclass(frozen=True)
class CosetRelation(RelationSpec):
    """
    Orbits of the subgroup K generated by ``gens``: p ~ q iff q ∈ K·p.

    ``base`` names the point whose images g·base label the classes gK·base.
    When every generator is a translation and their vectors are independent,
    K·p is the lattice p + Z t_1 + ... + Z t_k and membership is solved
    exactly. Otherwise the orbit of p is searched over words of length up to
    ``word_bound``; a negative answer is only decided once that orbit stops
    growing.
    """

    gens: tuple[Affine4, ...]
    base: Event
    word_bound: int = field(default_factory=lambda: settings.COSET_WORD_BOUND)
    _orbits: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    name = "coset"

    def __post_init__(self):
        object.__setattr__(self, "gens", tuple(self.gens))
        if self.word_bound < 0:
            raise PreconditionError("word_bound must be non-negative")

    @cached_property
    def _lattice(self) -> tuple[list[Vec4], list[int]] | None:
        """Translation vectors and a set of coordinates on which they stay independent."""
        identity = Matrix.identity(4)
        if any(g.linear != identity for g in self.gens):
            return None
        vectors = list(dict.fromkeys(g.translation for g in self.gens if not g.translation.is_zero()))
        if not vectors:
            return [], []
        if Matrix([v.coords for v in vectors]).rank() < len(vectors):
            return None
        coords: list[int] = []
        for c in range(4):
            if Matrix([[v[i] for i in coords + [c]] for v in vectors]).rank() == len(coords) + 1:
                coords.append(c)
        return vectors, coords

    def _in_lattice(self, d: Vec4) -> bool:
        vectors, coords = self._lattice
        if not vectors:
            return d.is_zero()
        system = Matrix([[v[c] for v in vectors] for c in coords])
        n = system.solve([d[c] for c in coords])
        if not all(k.is_integer() for k in n):
            return False
        total = ZERO_VEC
        for k, v in zip(n, vectors):
            total = total + v * k
        return total == d

    def _orbit(self, p: Event) -> tuple[frozenset, bool]:
        if p not in self._orbits:
            self._orbits[p] = self._search(p)
        return self._orbits[p]

    def _search(self, p: Event) -> tuple[frozenset, bool]:
        letters = list(self.gens) + [g.invert() for g in self.gens]
        seen = {p}
        frontier = [p]
        for _ in range(self.word_bound):
            nxt = []
            for e in frontier:
                for g in letters:
                    image = g.apply(e)
                    if image not in seen:
                        seen.add(image)
                        nxt.append(image)
            frontier = nxt
            if not frontier:
                return frozenset(seen), True
        return frozenset(seen), not frontier

    def compare(self, a: Event, b: Event) -> Verdict:
        if self._lattice is not None:
            return _verdict(self._in_lattice(b - a))
        orbit, saturated = self._orbit(a)
        if b in orbit:
            return TRUE
        return FALSE if saturated else UNDECIDED


def related(spec: RelationSpec, p: Event, q: Event) -> Verdict:
    return spec.related(p, q)


def standard_pencil(u: Vec4, m: MetricParams = UNIT_METRIC) -> PencilTypeII:
    """PencilTypeII(u, Zero), which coincides with R_u."""
    return PencilTypeII(u, RealSubgroupSpec.zero(), m)


def half_cone(c_hat: ScalarLike, sign: str = "+") -> HalfCone:
    return HalfCone(Scalar.coerce(c_hat), ConeSign(sign))
