"""
Small dense matrices over Q(sqrt 2).

Only what the group and synchrony code needs: products, transpose,
determinant, inverse, rank and linear solves, all by exact Gaussian
elimination.
"""
from typing import Iterable, Sequence

from relsim.core.errors import PreconditionError, ScalarDivisionError
from .field import ONE, ZERO, Scalar, ScalarLike


class Matrix:
    """Immutable rows x cols matrix of Scalars."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Iterable[Iterable[ScalarLike]]):
        data = tuple(tuple(Scalar.coerce(x) for x in row) for row in rows)
        if not data or any(len(r) != len(data[0]) for r in data):
            raise PreconditionError("matrix rows must be non-empty and of equal length")
        self.rows = data
        self.shape = (len(data), len(data[0]))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[ScalarLike]) -> "Matrix":
        n = len(entries)
        return cls([[entries[i] if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        return cls([[ZERO] * (n if m is None else m) for _ in range(n)])

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(", ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix([{body}])"

    @property
    def is_square(self) -> bool:
        return self.shape[0] == self.shape[1]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, k: ScalarLike) -> "Matrix":
        return Matrix([[k * x for x in row] for row in self.rows])

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.shape[1] != other.shape[0]:
                raise PreconditionError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows))
            return Matrix([[_dot(row, col) for col in cols] for row in self.rows])
        vec = tuple(other)
        if len(vec) != self.shape[1]:
            raise PreconditionError(f"shape mismatch {self.shape} @ vector of length {len(vec)}")
        return tuple(_dot(row, vec) for row in self.rows)

    def block(self, rows: range, cols: range) -> "Matrix":
        return Matrix([[self.rows[i][j] for j in cols] for i in rows])

    # ── elimination ────────────────────────────────────────────────────

    def _echelon(self) -> tuple[list[list[Scalar]], int, Scalar]:
        """Row-reduce a copy; returns (rows, rank, determinant factor)."""
        m = [list(r) for r in self.rows]
        n_rows, n_cols = self.shape
        rank, det = 0, ONE
        for col in range(n_cols):
            pivot = next((r for r in range(rank, n_rows) if m[r][col]), None)
            if pivot is None:
                det = ZERO
                continue
            if pivot != rank:
                m[rank], m[pivot] = m[pivot], m[rank]
                det = -det
            p = m[rank][col]
            det = det * p
            inv = p.inverse()
            for r in range(rank + 1, n_rows):
                f = m[r][col]
                if f:
                    f = f * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
            rank += 1
            if rank == n_rows:
                break
        return m, rank, det

    def rank(self) -> int:
        return self._echelon()[1]

    def det(self) -> Scalar:
        if not self.is_square:
            raise PreconditionError("determinant of a non-square matrix")
        _, rank, det = self._echelon()
        return det if rank == self.shape[0] else ZERO

    def solve(self, rhs: Sequence[ScalarLike]) -> tuple[Scalar, ...]:
        """Unique solution x of self @ x = rhs; raises if singular."""
        n = self.shape[0]
        if not self.is_square or len(rhs) != n:
            raise PreconditionError("solve needs a square system")
        m = [list(row) + [Scalar.coerce(b)] for row, b in zip(self.rows, rhs)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                raise ScalarDivisionError("singular linear system")
            m[col], m[pivot] = m[pivot], m[col]
            inv = m[col][col].inverse()
            m[col] = [x * inv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return tuple(row[n] for row in m)

    def inverse(self) -> "Matrix":
        n = self.shape[0]
        if not self.is_square:
            raise PreconditionError("inverse of a non-square matrix")
        m = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                raise ScalarDivisionError("matrix is singular")
            m[col], m[pivot] = m[pivot], m[col]
            inv = m[col][col].inverse()
            m[col] = [x * inv for x in m[col]]
            for r in range(n):
                if r != col and m[r][col]:
                    f = m[r][col]
                    m[r] = [x - f * y for x, y in zip(m[r], m[col])]
        return Matrix(row[n:] for row in m)


def _dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = ZERO
    for x, y in zip(u, v):
        if x and y:
            total = total + x * y
    return total
