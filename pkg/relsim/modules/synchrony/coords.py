"""
Non-standard inertial coordinates.

    r̄′ = λ A r̄,     t′ = λ (t + k̄ · A r̄)

with λ > 0, A a rotation and |k̄| < 1/c. k̄ = 0 gives Minkowski
coordinates up to scale and rotation; any other k̄ keeps the two-way
speed of light isotropic but makes the one-way speed direction dependent.
"""
from dataclasses import dataclass, field

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, ZERO, Matrix, Scalar
from relsim.modules.spacetime import UNIT_METRIC, Event, MetricParams, Vec3, dot3, norm3_sq, vec3


@dataclass(frozen=True)
class InertialCoords:
    lam: Scalar = ONE
    k: Vec3 = (ZERO, ZERO, ZERO)
    A: Matrix = field(default_factory=lambda: Matrix.identity(3))
    m: MetricParams = UNIT_METRIC

    def __post_init__(self):
        object.__setattr__(self, "lam", Scalar.coerce(self.lam))
        object.__setattr__(self, "k", vec3(self.k))
        if self.lam.sign() <= 0:
            raise PreconditionError(f"scale lambda must be > 0, got {self.lam}")
        if self.A.shape != (3, 3) or self.A.T @ self.A != Matrix.identity(3):
            raise PreconditionError("A must be an orthogonal 3x3 matrix")
        if self.c * self.c * norm3_sq(self.k) >= ONE:
            raise PreconditionError(f"synchrony vector must satisfy |k| < 1/c, got k = {_fmt(self.k)}")

    @classmethod
    def identity(cls, m: MetricParams = UNIT_METRIC) -> "InertialCoords":
        return cls(m=m)

    @property
    def c(self) -> Scalar:
        return self.m.lam

    @property
    def is_standard(self) -> bool:
        return not any(self.k)

    def rotate(self, r: Vec3) -> Vec3:
        return tuple(self.A @ r)


def _fmt(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def to_prime(phi: InertialCoords, p: Event) -> Event:
    ar = phi.rotate(p.spatial)
    t = phi.lam * (p.time + dot3(phi.k, ar))
    return Event(*(phi.lam * x for x in ar), t)


def from_prime(phi: InertialCoords, p: Event) -> Event:
    inv = phi.lam.inverse()
    scaled = tuple(inv * x for x in p.spatial)  # = A r̄
    t = inv * p.time - dot3(phi.k, scaled)
    r = tuple(phi.A.T @ scaled)
    return Event(*r, t)


def lightcone_image(phi: InertialCoords) -> Matrix:
    """
    Symmetric matrix of |r̄′|² − c²(t′ − k̄·r̄′)², the quadratic form that
    vanishes exactly on the image of the standard light cone.
    """
    c_sq = phi.c * phi.c
    k = phi.k
    rows = []
    for i in range(3):
        rows.append([(ONE if i == j else ZERO) - c_sq * k[i] * k[j] for j in range(3)] + [c_sq * k[i]])
    rows.append([c_sq * k[j] for j in range(3)] + [-c_sq])
    return Matrix(rows)


def quadratic_value(Q: Matrix, v) -> Scalar:
    x = tuple(v)
    return dot_vec(x, Q @ x)


def dot_vec(x, y) -> Scalar:
    total = ZERO
    for a, b in zip(x, y):
        total = total + a * b
    return total
