"""Rational points on the unit sphere from Pythagorean quadruples."""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import isqrt

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, Scalar
from relsim.modules.spacetime import Vec3, norm3_sq


@lru_cache(maxsize=8)
def pythagorean_directions(bound: int) -> tuple[Vec3, ...]:
    """
    All unit vectors (a/d, b/d, c/d) with a² + b² + c² = d², 1 ≤ d ≤ bound.

    Signs and permutations are included, so the six axis directions are
    always present. Order is deterministic: by d, then lexicographic.
    """
    found: dict[tuple[Fraction, Fraction, Fraction], int] = {}
    for d in range(1, bound + 1):
        d_sq = d * d
        for a in range(d + 1):
            for b in range(a, d + 1):
                rest = d_sq - a * a - b * b
                if rest < b * b:
                    break
                c = isqrt(rest)
                if c * c != rest:
                    continue
                for x, y, z in {(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)}:
                    for sx, sy, sz in product((1, -1), repeat=3):
                        key = (Fraction(sx * x, d), Fraction(sy * y, d), Fraction(sz * z, d))
                        found.setdefault(key, d)
    ordered = sorted(found, key=lambda v: (found[v], v))
    return tuple(tuple(Scalar(x) for x in v) for v in ordered)


def require_unit(n: Vec3) -> None:
    if norm3_sq(n) != ONE:
        raise PreconditionError(f"direction {tuple(str(x) for x in n)} is not a unit vector")


def negate(n: Vec3) -> Vec3:
    return tuple(-x for x in n)
