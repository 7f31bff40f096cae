"""
Affine maps of R^4: x ↦ Lx + b.

Affine4 is the carrier for every group element in relsim. Composition
follows function composition: (g ∘ h)(x) = g(h(x)).
"""
from relsim.core.errors import PreconditionError
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import ZERO_VEC, Event, Vec4


class Affine4:
    """Invertible affine map with exact Scalar entries."""

    __slots__ = ("linear", "translation", "_rows")

    def __init__(self, linear: Matrix, translation: Vec4 = ZERO_VEC, *, check: bool = True):
        if linear.shape != (4, 4):
            raise PreconditionError(f"linear part must be 4x4, got {linear.shape}")
        if check and not linear.det():
            raise PreconditionError("linear part is singular")
        self.linear = linear
        self.translation = translation
        self._rows = linear.rows

    @classmethod
    def identity(cls) -> "Affine4":
        return _IDENTITY

    # ── action ─────────────────────────────────────────────────────────

    def apply(self, p: Event) -> Event:
        x = p.coords
        t = self.translation.coords
        return Event(*(_row_dot(row, x) + t[i] for i, row in enumerate(self._rows)))

    def apply_linear(self, v: Vec4) -> Vec4:
        x = v.coords
        return Vec4(*(_row_dot(row, x) for row in self._rows))

    def __call__(self, p: Event) -> Event:
        return self.apply(p)

    # ── group structure ────────────────────────────────────────────────

    def compose(self, other: "Affine4") -> "Affine4":
        """self ∘ other."""
        linear = self.linear @ other.linear
        translation = self.apply_linear(other.translation) + self.translation
        return Affine4(linear, translation, check=False)

    def __matmul__(self, other: "Affine4") -> "Affine4":
        if not isinstance(other, Affine4):
            return NotImplemented
        return self.compose(other)

    def invert(self) -> "Affine4":
        inv = self.linear.inverse()
        translation = -Vec4(*(inv @ self.translation.coords))
        return Affine4(inv, translation, check=False)

    def conjugate_by(self, frame: "Affine4") -> "Affine4":
        """frame⁻¹ ∘ self ∘ frame."""
        return frame.invert().compose(self).compose(frame)

    def split_semidirect(self) -> tuple["Affine4", "Affine4"]:
        """Unique factorisation self = translation ∘ homogeneous."""
        return Affine4(self.linear, check=False), Affine4(_I4, self.translation, check=False)

    def is_identity(self) -> bool:
        return self.linear == _I4 and self.translation.is_zero()

    @property
    def det(self) -> Scalar:
        return self.linear.det()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Affine4):
            return NotImplemented
        return self.linear == other.linear and self.translation == other.translation

    def __hash__(self) -> int:
        return hash((self.linear, self.translation))

    def __repr__(self) -> str:
        return f"Affine4(linear={self.linear!r}, translation={self.translation})"


def _row_dot(row, x) -> Scalar:
    total = row[0] * x[0]
    for a, b in zip(row[1:], x[1:]):
        if a and b:
            total = total + a * b
    return total


def compose(g: Affine4, h: Affine4) -> Affine4:
    return g.compose(h)


def invert(g: Affine4) -> Affine4:
    return g.invert()


def apply(g: Affine4, p: Event) -> Event:
    return g.apply(p)


_I4 = Matrix.identity(4)
_IDENTITY = Affine4(_I4, check=False)
