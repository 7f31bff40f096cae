"""
Lorentzian forms g_λ = diag(1, 1, 1, -λ²), causal classes and causal order.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, Matrix, Scalar
from relsim.modules.scalar.field import ScalarLike
from .vectors import Event, Vec4


@dataclass(frozen=True)
class MetricParams:
    """The λ of g_λ; λ = c is the physical Minkowski metric."""

    lam: Scalar = ONE

    def __post_init__(self):
        object.__setattr__(self, "lam", Scalar.coerce(self.lam))
        if self.lam.sign() <= 0:
            raise PreconditionError(f"metric parameter lambda must be > 0, got {self.lam}")

    @property
    def lam_sq(self) -> Scalar:
        return self.lam * self.lam

    def gram(self) -> Matrix:
        return Matrix.diagonal([1, 1, 1, -self.lam_sq])


UNIT_METRIC = MetricParams()


def metric(lam: ScalarLike = 1) -> MetricParams:
    return MetricParams(Scalar.coerce(lam))


class CausalClass(str, Enum):
    ZERO = "zero"
    SPACELIKE = "spacelike"
    NULL_FUTURE = "null-future"
    NULL_PAST = "null-past"
    TIMELIKE_FUTURE = "timelike-future"
    TIMELIKE_PAST = "timelike-past"

    @property
    def is_causal(self) -> bool:
        return self not in (CausalClass.ZERO, CausalClass.SPACELIKE)

    @property
    def is_future(self) -> bool:
        return self in (CausalClass.NULL_FUTURE, CausalClass.TIMELIKE_FUTURE)

    def flipped(self) -> "CausalClass":
        return _FLIP.get(self, self)


_FLIP = {
    CausalClass.NULL_FUTURE: CausalClass.NULL_PAST,
    CausalClass.NULL_PAST: CausalClass.NULL_FUTURE,
    CausalClass.TIMELIKE_FUTURE: CausalClass.TIMELIKE_PAST,
    CausalClass.TIMELIKE_PAST: CausalClass.TIMELIKE_FUTURE,
}


def lorentz_form(u: Vec4, v: Vec4, m: MetricParams = UNIT_METRIC) -> Scalar:
    """u1 v1 + u2 v2 + u3 v3 - λ² u4 v4, exactly."""
    a, b = u.coords, v.coords
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] - m.lam_sq * a[3] * b[3]


def causal_class(v: Vec4, m: MetricParams = UNIT_METRIC) -> CausalClass:
    if v.is_zero():
        return CausalClass.ZERO
    q = lorentz_form(v, v, m).sign()
    if q > 0:
        return CausalClass.SPACELIKE
    # q <= 0 and v != 0 force v4 != 0
    future = v.time.sign() > 0
    if q < 0:
        return CausalClass.TIMELIKE_FUTURE if future else CausalClass.TIMELIKE_PAST
    return CausalClass.NULL_FUTURE if future else CausalClass.NULL_PAST


def is_future_timelike(u: Vec4, m: MetricParams = UNIT_METRIC) -> bool:
    return causal_class(u, m) is CausalClass.TIMELIKE_FUTURE


def require_future_timelike(u: Vec4, m: MetricParams = UNIT_METRIC, name: str = "u") -> None:
    if not is_future_timelike(u, m):
        raise PreconditionError(f"{name} = {u} must be future-timelike, is {causal_class(u, m).value}")


def causal_order(p: Event, q: Event, m: MetricParams = UNIT_METRIC) -> bool:
    """p ≤ q: q - p is zero or a future-pointing causal vector."""
    cls = causal_class(q - p, m)
    return cls is CausalClass.ZERO or cls.is_future


@dataclass(frozen=True)
class Minkowski:
    m: MetricParams = UNIT_METRIC


@dataclass(frozen=True)
class Classical:
    pass


SpacetimeKind = Union[Minkowski, Classical]


def causally_connectible(p: Event, q: Event, kind: SpacetimeKind) -> bool:
    if isinstance(kind, Classical):
        return p.time != q.time
    if p == q:
        return False
    return causal_class(p - q, kind.m).is_causal


def standard_sim(u: Vec4, x: Event, y: Event, m: MetricParams = UNIT_METRIC) -> bool:
    """x R_u y: x - y is g-orthogonal to the future-timelike u."""
    require_future_timelike(u, m)
    return not lorentz_form(x - y, u, m)
