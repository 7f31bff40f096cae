"""
Constructors for rotations, boosts, translations, dilatations, reflections.

All entries stay in Q(sqrt 2): rotations come from the Cayley transform of
a skew matrix and boosts from (γ, βγ) pairs on the unit hyperbola.
"""
from functools import lru_cache
from typing import Sequence

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, ZERO, Matrix, Scalar
from relsim.modules.scalar.field import ScalarLike
from relsim.modules.spacetime import (
    UNIT_METRIC,
    MetricParams,
    Vec4,
    causal_class,
    CausalClass,
    lorentz_form,
)
from .affine import Affine4

_I3 = Matrix.identity(3)


def translation(b: Vec4) -> Affine4:
    return Affine4(Matrix.identity(4), b, check=False)


def dilatation(lam: ScalarLike) -> Affine4:
    lam = Scalar.coerce(lam)
    if lam.sign() <= 0:
        raise PreconditionError(f"dilatation factor must be > 0, got {lam}")
    return Affine4(Matrix.diagonal([lam] * 4), check=False)


def time_inversion() -> Affine4:
    """Θ: (x̄, t) ↦ (x̄, -t)."""
    return Affine4(Matrix.diagonal([1, 1, 1, -1]), check=False)


def parity() -> Affine4:
    """(x̄, t) ↦ (-x̄, t)."""
    return Affine4(Matrix.diagonal([-1, -1, -1, 1]), check=False)


def embed_spatial(S: Matrix, w: Sequence[ScalarLike] = (0, 0, 0)) -> Matrix:
    """The 4x4 linear part (S w; 0ᵀ 1)."""
    rows = [list(S.rows[i]) + [Scalar.coerce(w[i])] for i in range(3)]
    rows.append([ZERO, ZERO, ZERO, ONE])
    return Matrix(rows)


def spatial_rotation(S: Matrix) -> Affine4:
    return Affine4(embed_spatial(S), check=False)


def galilei_boost(w: Sequence[ScalarLike]) -> Affine4:
    """x ↦ (x̄ + x4·w, x4)."""
    return Affine4(embed_spatial(_I3, w), check=False)


def cayley_matrix(p1: ScalarLike, p2: ScalarLike, p3: ScalarLike) -> Matrix:
    """(I - K)⁻¹(I + K) for the skew matrix K of (p1, p2, p3)."""
    p1, p2, p3 = (Scalar.coerce(p) for p in (p1, p2, p3))
    K = Matrix([[ZERO, -p3, p2], [p3, ZERO, -p1], [-p2, p1, ZERO]])
    return (_I3 - K).inverse() @ (_I3 + K)


def rotation_cayley(p1: ScalarLike, p2: ScalarLike, p3: ScalarLike) -> Affine4:
    return spatial_rotation(cayley_matrix(p1, p2, p3))


@lru_cache(maxsize=1)
def cube_rotation_matrices() -> tuple[Matrix, ...]:
    """The 24 rotations of the cube, closed from two quarter turns."""
    gens = [cayley_matrix(0, 0, 1), cayley_matrix(1, 0, 0)]
    seen = {_I3}
    frontier = [_I3]
    while frontier:
        nxt = []
        for S in frontier:
            for G in gens:
                R = G @ S
                if R not in seen:
                    seen.add(R)
                    nxt.append(R)
        frontier = nxt
    return tuple(sorted(seen, key=lambda M: tuple(str(x) for row in M.rows for x in row)))


def cube_rotations() -> list[Affine4]:
    return [spatial_rotation(S) for S in cube_rotation_matrices()]


def boost(gamma: ScalarLike, beta_gamma: ScalarLike, axis: int = 1, m: MetricParams = UNIT_METRIC) -> Affine4:
    """
    Pure boost along spatial axis 1, 2 or 3.

    Maps e4 to (βγ·λ along the axis, γ): an observer at rest acquires
    velocity β·λ along the positive axis.
    """
    gamma, beta_gamma = Scalar.coerce(gamma), Scalar.coerce(beta_gamma)
    if gamma.sign() <= 0 or gamma * gamma - beta_gamma * beta_gamma != ONE:
        raise PreconditionError(
            f"boost parameters need gamma > 0 and gamma^2 - (beta*gamma)^2 = 1, got ({gamma}, {beta_gamma})"
        )
    if axis not in (1, 2, 3):
        raise PreconditionError(f"boost axis must be 1, 2 or 3, got {axis}")
    j = axis - 1
    L = [[ONE if r == c else ZERO for c in range(4)] for r in range(4)]
    L[j][j] = gamma
    L[3][3] = gamma
    L[j][3] = beta_gamma * m.lam
    L[3][j] = beta_gamma / m.lam
    return Affine4(Matrix(L), check=False)


def boost_x(gamma: ScalarLike, beta_gamma: ScalarLike, m: MetricParams = UNIT_METRIC) -> Affine4:
    return boost(gamma, beta_gamma, 1, m)


def boost_parameters(p: ScalarLike, q: ScalarLike) -> tuple[Scalar, Scalar]:
    """Rational point ((p²+q²)/2pq, (p²-q²)/2pq) on the unit hyperbola."""
    p, q = Scalar.coerce(p), Scalar.coerce(q)
    if p.sign() <= 0 or q.sign() <= 0:
        raise PreconditionError("boost_parameters needs p, q > 0")
    two_pq = 2 * p * q
    return (p * p + q * q) / two_pq, (p * p - q * q) / two_pq


def lorentz_reflection(w: Vec4, m: MetricParams = UNIT_METRIC) -> Affine4:
    """x ↦ x - 2 g(x,w)/g(w,w) w for a non-null w."""
    norm = lorentz_form(w, w, m)
    if not norm:
        raise PreconditionError(f"cannot reflect in null or zero vector {w}")
    gw = [w[0], w[1], w[2], -m.lam_sq * w[3]]
    k = Scalar(2) / norm
    L = [
        [(ONE if i == j else ZERO) - k * w[i] * gw[j] for j in range(4)]
        for i in range(4)
    ]
    return Affine4(Matrix(L), check=False)


def orthogonal_part(r: Vec4, u: Vec4, m: MetricParams = UNIT_METRIC) -> Vec4:
    """Component of r g-orthogonal to the non-null u."""
    return r - u * (lorentz_form(r, u, m) / lorentz_form(u, u, m))


def rest_isotropy_element(r1: Vec4, r2: Vec4, u: Vec4, m: MetricParams = UNIT_METRIC) -> Affine4:
    """
    Product of reflections in the parts of r1, r2 orthogonal to u.

    The result fixes u and is proper and orthochronous. If either r is
    parallel to u the identity is returned.
    """
    ws = [orthogonal_part(r, u, m) for r in (r1, r2)]
    if any(w.is_zero() for w in ws):
        return Affine4.identity()
    if any(causal_class(w, m) is not CausalClass.SPACELIKE for w in ws):
        raise PreconditionError(f"u = {u} is not timelike")
    return lorentz_reflection(ws[1], m).compose(lorentz_reflection(ws[0], m))
