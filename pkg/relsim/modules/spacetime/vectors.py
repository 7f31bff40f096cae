"""
Free vectors and events of R^4.

Components are (x1, x2, x3, x4): the spatial part x̄ = (x1, x2, x3) and
the time component x4, stored in time units. Events and vectors are
distinct types so the affine rules (Event - Event = Vec4,
Event + Vec4 = Event) are enforced by the operators.
"""
from typing import Sequence

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, ZERO, Scalar
from relsim.modules.scalar.field import ScalarLike

Vec3 = tuple[Scalar, Scalar, Scalar]


def vec3(*xs: ScalarLike) -> Vec3:
    if len(xs) == 1 and hasattr(xs[0], "__iter__"):
        xs = tuple(xs[0])
    if len(xs) != 3:
        raise PreconditionError(f"expected 3 components, got {len(xs)}")
    return tuple(Scalar.coerce(x) for x in xs)


def dot3(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def norm3_sq(u: Sequence[Scalar]) -> Scalar:
    return dot3(u, u)


class _Point4:
    __slots__ = ("coords",)

    def __init__(self, *xs: ScalarLike):
        if len(xs) == 1 and hasattr(xs[0], "__iter__"):
            xs = tuple(xs[0])
        if len(xs) != 4:
            raise PreconditionError(f"expected 4 components, got {len(xs)}")
        self.coords: tuple[Scalar, ...] = tuple(Scalar.coerce(x) for x in xs)

    @property
    def spatial(self) -> Vec3:
        return self.coords[:3]

    @property
    def time(self) -> Scalar:
        return self.coords[3]

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i: int) -> Scalar:
        return self.coords[i]

    def __len__(self) -> int:
        return 4

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.coords))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(str(x) for x in self.coords)})"

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.coords) + ")"


class Vec4(_Point4):
    """Free vector of R^4."""

    __slots__ = ()

    def __add__(self, other: "Vec4") -> "Vec4":
        if not isinstance(other, Vec4):
            return NotImplemented
        return Vec4(*(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vec4") -> "Vec4":
        if not isinstance(other, Vec4):
            return NotImplemented
        return Vec4(*(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vec4":
        return Vec4(*(-x for x in self.coords))

    def __mul__(self, k: ScalarLike) -> "Vec4":
        if isinstance(k, _Point4):
            return NotImplemented
        return Vec4(*(k * x for x in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)


class Event(_Point4):
    """A point of R^4."""

    __slots__ = ()

    def __sub__(self, other):
        if isinstance(other, Event):
            return Vec4(*(x - y for x, y in zip(self.coords, other.coords)))
        if isinstance(other, Vec4):
            return Event(*(x - y for x, y in zip(self.coords, other.coords)))
        return NotImplemented

    def __add__(self, other: Vec4) -> "Event":
        if not isinstance(other, Vec4):
            return NotImplemented
        return Event(*(x + y for x, y in zip(self.coords, other.coords)))

    @property
    def position(self) -> Vec4:
        return Vec4(*self.coords)


E1 = Vec4(1, 0, 0, 0)
E2 = Vec4(0, 1, 0, 0)
E3 = Vec4(0, 0, 1, 0)
E4 = Vec4(0, 0, 0, 1)
ZERO_VEC = Vec4(0, 0, 0, 0)
ORIGIN = Event(0, 0, 0, 0)

BASIS = (E1, E2, E3, E4)
