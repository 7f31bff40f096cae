"""
Exact membership predicates for the named groups.

Every predicate reduces to equalities and signs of Scalars computed from
the linear part L and translation b of an Affine4.
"""
from dataclasses import dataclass, field
from enum import Enum

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, ZERO, Matrix, Scalar
from relsim.modules.spacetime import (
    UNIT_METRIC,
    MetricParams,
    Vec4,
    require_future_timelike,
)
from .affine import Affine4


class GroupTag(str, Enum):
    NEWTON = "newton"
    CONFORMAL_NEWTON = "conformal-newton"
    GALILEI = "galilei"
    CONFORMAL_GALILEI = "conformal-galilei"
    LORENTZ = "lorentz"
    ORTHOCHRONOUS_LORENTZ = "orthochronous-lorentz"
    PROPER_ORTHOCHRONOUS_LORENTZ = "proper-orthochronous-lorentz"
    POINCARE = "poincare"
    ORTHOCHRONOUS_PROPER_POINCARE = "orthochronous-proper-poincare"
    CONFORMAL_POINCARE = "conformal-poincare"
    REST_ISOTROPY = "rest-isotropy"
    CONFORMAL_REST_ISOTROPY = "conformal-rest-isotropy"
    LINE_STABILIZER = "line-stabilizer"
    LINE_STABILIZER_CONFORMAL = "line-stabilizer-conformal"
    NEWTON_LINE_STABILIZER_CONFORMAL = "newton-line-stabilizer-conformal"
    TIME_INVERSION_PAIR = "time-inversion-pair"
    SPATIAL_ROTATIONS = "spatial-rotations"
    TRANSLATIONS = "translations"


_NEEDS_U = {GroupTag.REST_ISOTROPY, GroupTag.CONFORMAL_REST_ISOTROPY}
_LINE_TAGS = {
    GroupTag.LINE_STABILIZER,
    GroupTag.LINE_STABILIZER_CONFORMAL,
    GroupTag.NEWTON_LINE_STABILIZER_CONFORMAL,
}


@dataclass(frozen=True)
class GroupId:
    """
    A named group, with its rest vector u where the tag needs one.

    Line stabilizers refer to ℓ = o + R·e4; a ``frame`` g moves them to the
    line g(ℓ) by conjugation.
    """

    tag: GroupTag
    u: Vec4 | None = None
    m: MetricParams = UNIT_METRIC
    frame: Affine4 | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.tag in _NEEDS_U:
            if self.u is None:
                raise PreconditionError(f"{self.tag.value} needs a rest vector u")
            require_future_timelike(self.u, self.m)
        if self.frame is not None and self.tag not in _LINE_TAGS:
            raise PreconditionError(f"{self.tag.value} does not take a frame")

    def __str__(self) -> str:
        return self.tag.value if self.u is None else f"{self.tag.value}(u={self.u})"


def group(tag: GroupTag | str, u: Vec4 | None = None, m: MetricParams = UNIT_METRIC, frame: Affine4 | None = None) -> GroupId:
    return GroupId(GroupTag(tag), u, m, frame)


# ── shape predicates on linear parts ─────────────────────────────────────

def _spatial_block(L: Matrix) -> Matrix:
    return L.block(range(3), range(3))


def _is_rotation(S: Matrix) -> bool:
    return S.T @ S == Matrix.identity(3) and S.det() == ONE


def _classical_shape(L: Matrix, allow_boost: bool) -> bool:
    """L = (S w; 0ᵀ 1) with S a rotation, and w = 0 unless allow_boost."""
    r = L.rows
    if r[3] != (ZERO, ZERO, ZERO, ONE):
        return False
    if not allow_boost and any(r[i][3] for i in range(3)):
        return False
    return _is_rotation(_spatial_block(L))


def _positive_factor(L: Matrix) -> Scalar | None:
    """μ with L/μ normalised on entry (4,4), or None when that entry is not positive."""
    mu = L.rows[3][3]
    return mu if mu.sign() > 0 else None


def _is_lorentz(L: Matrix, m: MetricParams) -> bool:
    G = m.gram()
    return L.T @ G @ L == G


def _conformal_factor(L: Matrix, m: MetricParams) -> Scalar | None:
    """μ > 0 with LᵀGL = μG, or None."""
    G = m.gram()
    M = L.T @ G @ L
    mu = M.rows[0][0]
    if mu.sign() <= 0 or M != G.scale(mu):
        return None
    return mu


def _on_time_axis(b: Vec4) -> bool:
    return not any(b.spatial)


def _scaled_rotation(L: Matrix, allow_time_flip: bool) -> bool:
    """L in R⁺·SO₄(3), optionally also R⁺·Θ·SO₄(3)."""
    r = L.rows
    if any(r[3][j] for j in range(3)) or any(r[i][3] for i in range(3)):
        return False
    mu = r[3][3]
    if mu.sign() < 0 and allow_time_flip:
        mu = -mu
    if mu.sign() <= 0:
        return False
    S = _spatial_block(L).scale(mu.inverse())
    return _is_rotation(S)


# ── the predicate ────────────────────────────────────────────────────────

def member(g: Affine4, G: GroupId) -> bool:
    if G.frame is not None:
        g = g.conjugate_by(G.frame)
    L, b = g.linear, g.translation
    tag, m = G.tag, G.m

    if tag is GroupTag.TRANSLATIONS:
        return L == Matrix.identity(4)
    if tag is GroupTag.SPATIAL_ROTATIONS:
        return b.is_zero() and _classical_shape(L, allow_boost=False)
    if tag is GroupTag.NEWTON:
        return _classical_shape(L, allow_boost=False)
    if tag is GroupTag.GALILEI:
        return _classical_shape(L, allow_boost=True)
    if tag in (GroupTag.CONFORMAL_NEWTON, GroupTag.CONFORMAL_GALILEI):
        mu = _positive_factor(L)
        return mu is not None and _classical_shape(
            L.scale(mu.inverse()), allow_boost=tag is GroupTag.CONFORMAL_GALILEI
        )
    if tag is GroupTag.TIME_INVERSION_PAIR:
        return b.is_zero() and L in (Matrix.identity(4), Matrix.diagonal([1, 1, 1, -1]))

    if tag in (GroupTag.LORENTZ, GroupTag.ORTHOCHRONOUS_LORENTZ, GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ):
        if not b.is_zero() or not _is_lorentz(L, m):
            return False
        if tag is GroupTag.LORENTZ:
            return True
        if L.rows[3][3].sign() <= 0:
            return False
        return tag is GroupTag.ORTHOCHRONOUS_LORENTZ or L.det() == ONE
    if tag is GroupTag.POINCARE:
        return _is_lorentz(L, m)
    if tag is GroupTag.ORTHOCHRONOUS_PROPER_POINCARE:
        return _is_lorentz(L, m) and L.rows[3][3].sign() > 0 and L.det() == ONE
    if tag is GroupTag.CONFORMAL_POINCARE:
        return _conformal_factor(L, m) is not None

    if tag is GroupTag.REST_ISOTROPY:
        return (
            _is_lorentz(L, m)
            and Vec4(*(L @ G.u.coords)) == G.u
            and L.det() == ONE
        )
    if tag is GroupTag.CONFORMAL_REST_ISOTROPY:
        image = Vec4(*(L @ G.u.coords))
        rho = _ratio(image, G.u)
        if rho is None or rho.sign() <= 0:
            return False
        mu = _conformal_factor(L, m)
        return mu == rho * rho and L.scale(rho.inverse()).det() == ONE

    if tag is GroupTag.LINE_STABILIZER:
        if not _on_time_axis(b) or not _is_lorentz(L, m):
            return False
        column = tuple(r[3] for r in L.rows)
        return not any(column[:3]) and column[3] in (ONE, -ONE)
    if tag is GroupTag.NEWTON_LINE_STABILIZER_CONFORMAL:
        return _on_time_axis(b) and _scaled_rotation(L, allow_time_flip=False)
    if tag is GroupTag.LINE_STABILIZER_CONFORMAL:
        return _on_time_axis(b) and _scaled_rotation(L, allow_time_flip=True)
    raise PreconditionError(f"unknown group tag {tag!r}")


def _ratio(v: Vec4, u: Vec4) -> Scalar | None:
    """ρ with v = ρu, or None."""
    pivot = next(i for i in range(4) if u[i])
    rho = v[pivot] / u[pivot]
    return rho if v == u * rho else None


def isotropy(g: Affine4, p) -> bool:
    """g belongs to the isotropy subgroup H(p): g·p = p."""
    return g.apply(p) == p


def conjugate_isotropy_check(lam: Affine4, u: Vec4, g: Affine4, m: MetricParams = UNIT_METRIC) -> bool:
    """
    g ∈ H(Λu) ⟺ Λ⁻¹gΛ ∈ H(u) on the given instance.

    Λ must keep u future-timelike (an orthochronous Lorentz map).
    """
    image = lam.apply_linear(u)
    left = member(g, GroupId(GroupTag.REST_ISOTROPY, image, m))
    right = member(g.conjugate_by(lam), GroupId(GroupTag.REST_ISOTROPY, u, m))
    return left == right

