"""
Exact arithmetic in the quadratic field Q(sqrt 2).

A Scalar is the real number a + b*sqrt(2) with a, b rational. Every
predicate used elsewhere (group membership, orthogonality, causal class,
subgroup rank) reduces to signs and equalities of Scalars, so nothing in
the package ever needs a floating-point tolerance.
"""
from fractions import Fraction
from math import isqrt, sqrt
from typing import Union

from relsim.core.errors import ScalarDivisionError

Rational = Fraction
ScalarLike = Union["Scalar", int, Fraction]


def _frac(value) -> Fraction:
    return value if type(value) is Fraction else Fraction(value)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class Scalar:
    """Immutable element a + b*sqrt(2) of Q(sqrt 2)."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0):
        self._a = _frac(a)
        self._b = _frac(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Scalar")

    # ── arithmetic ─────────────────────────────────────────────────────

    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self._a + other._a, self._b + other._b)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a + other, self._b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self._a - other._a, self._b - other._b)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a - other, self._b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(other - self._a, -self._b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            a, b, c, d = self._a, self._b, other._a, other._b
            if not b and not d:
                return Scalar(a * c)
            return Scalar(a * c + 2 * b * d, a * d + b * c)
        if isinstance(other, (int, Fraction)):
            return Scalar(self._a * other, self._b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ScalarDivisionError(f"division of {self} by zero")
            return Scalar(self._a / other, self._b / other)
        if isinstance(other, Scalar):
            if not other._b:
                if not other._a:
                    raise ScalarDivisionError(f"division of {self} by zero")
                return Scalar(self._a / other._a, self._b / other._a)
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scalar(other) * self.inverse()
        return NotImplemented

    def __neg__(self) -> "Scalar":
        return Scalar(-self._a, -self._b)

    def __pos__(self) -> "Scalar":
        return self

    def __abs__(self) -> "Scalar":
        return -self if self.sign() < 0 else self

    def __pow__(self, exponent: int) -> "Scalar":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base = ONE, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "Scalar":
        """Galois conjugate a - b*sqrt(2)."""
        return Scalar(self._a, -self._b)

    def norm(self) -> Fraction:
        """Field norm a^2 - 2 b^2; zero only for the zero Scalar."""
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> "Scalar":
        n = self.norm()
        if n == 0:
            raise ScalarDivisionError("division by zero Scalar")
        return Scalar(self._a / n, -self._b / n)

    # ── predicates ─────────────────────────────────────────────────────

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(2) without floating point."""
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: the term with the larger square wins
        return sa if self._a * self._a > 2 * self._b * self._b else sb

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._a.denominator == 1

    def sqrt_exact(self) -> "Scalar | None":
        """Non-negative square root inside Q(sqrt 2), or None when it leaves the field."""
        s = self.sign()
        if s < 0:
            return None
        if s == 0:
            return ZERO
        a, b = self._a, self._b
        if b == 0:
            root = rational_sqrt(a)
            if root is not None:
                return Scalar(root)
            root = rational_sqrt(a / 2)
            return None if root is None else Scalar(0, root)
        # (p + q r2)^2 = a + b r2  <=>  p^2 + 2 q^2 = a, 2 p q = b
        disc = rational_sqrt(a * a - 2 * b * b)
        if disc is None:
            return None
        for p_sq in ((a + disc) / 2, (a - disc) / 2):
            p = rational_sqrt(p_sq)
            if not p:
                continue
            candidate = Scalar(p, b / (2 * p))
            if candidate * candidate == self:
                return abs(candidate)
        return None

    # ── comparison and hashing ─────────────────────────────────────────

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._a) if self._b == 0 else hash((self._a, self._b))

    def _cmp(self, other) -> int:
        if isinstance(other, (int, Fraction)):
            other = Scalar(other)
        elif not isinstance(other, Scalar):
            return NotImplemented
        return (self - other).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return c if c is NotImplemented else c >= 0

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    # ── conversions ────────────────────────────────────────────────────

    def __float__(self) -> float:
        """Approximation for cross-check oracles only; never used in decisions."""
        return float(self._a) + float(self._b) * sqrt(2.0)

    def __repr__(self) -> str:
        return f"Scalar({self._a!s}, {self._b!s})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        op = "+" if self._b > 0 else "-"
        return f"{self._a} {op} {abs(self._b)}*r2"


ZERO = Scalar(0)
ONE = Scalar(1)
SQRT2 = Scalar(0, 1)


def scalar_arith(x: Scalar, y: Scalar, op: str) -> Scalar:
    """Dispatch one of add/sub/mul/div on two Scalars."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def scalar_sign(x: Scalar) -> int:
    return x.sign()


def scalar_is_rational(x: Scalar) -> bool:
    return x.is_rational()
