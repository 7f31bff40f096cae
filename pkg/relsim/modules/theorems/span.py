"""
The additive span of a rotation orbit SO(3)·b̄ is all of R³; instances are
certified by bounded integer-combination search.
"""
from math import ceil
from typing import Sequence

from relsim.core.errors import PreconditionError
from relsim.modules.groups import cayley_matrix, cube_rotation_matrices
from relsim.modules.scalar import Matrix, Scalar
from relsim.modules.spacetime import vec3
from .config import theorem_settings
from .report import CheckRecorder, TheoremReport, render

THEOREM_ID = "rotation-span"

Vector = tuple[Scalar, Scalar, Scalar]


def _add(u: Vector, v: Vector, sign: int) -> Vector:
    if sign > 0:
        return (u[0] + v[0], u[1] + v[1], u[2] + v[2])
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _ball(moves: Sequence[Vector], radius: int) -> dict[Vector, tuple[int, ...]]:
    """Shortest signed word (±(index+1)) reaching each sum of ≤ radius moves."""
    zero = (Scalar(0),) * 3
    reached = {zero: ()}
    frontier = [zero]
    for _ in range(radius):
        nxt = []
        for point in frontier:
            word = reached[point]
            for index, move in enumerate(moves):
                for sign in (1, -1):
                    image = _add(point, move, sign)
                    if image not in reached:
                        reached[image] = word + (sign * (index + 1),)
                        nxt.append(image)
        frontier = nxt
    return reached


def _coefficients(word: Sequence[int], count: int) -> list[int]:
    coeffs = [0] * count
    for letter in word:
        coeffs[abs(letter) - 1] += 1 if letter > 0 else -1
    return coeffs


def find_combination(
    b: Vector, target: Vector, rotations: Sequence[Matrix], depth: int
) -> list[int] | None:
    """
    Integers n_i with Σ|n_i| ≤ depth and Σ n_i S_i b = target, or None.

    Meet in the middle: both halves come from the ball of radius ⌈depth/2⌉.
    """
    moves = []
    owners = []
    for i, S in enumerate(rotations):
        image = tuple(S @ b)
        if image not in moves:
            moves.append(image)
            owners.append(i)
    ball = _ball(moves, ceil(depth / 2))
    best = None
    for point, word in ball.items():
        rest = ball.get(_add(target, point, -1))
        if rest is not None and len(word) + len(rest) <= depth:
            if best is None or len(word) + len(rest) < len(best):
                best = word + rest
    if best is None:
        return None
    coeffs = [0] * len(rotations)
    for j, n in enumerate(_coefficients(best, len(moves))):
        coeffs[owners[j]] += n
    return coeffs


def default_rotations() -> list[Matrix]:
    """Cube rotations plus two rotations taking (3,4,0) onto the axes."""
    return list(cube_rotation_matrices()) + [cayley_matrix(0, 0, Scalar(-1) / 2), cayley_matrix(0, 0, Scalar(1) / 3)]


def default_targets(b: Vector) -> list[Vector]:
    return [
        b,
        tuple(2 * x for x in b),
        vec3(5, 0, 0),
        vec3(0, 5, 0),
        vec3(1, 0, 0),
        vec3(0, 0, 1),
    ]


def verify_rotation_span(
    b: Sequence,
    targets: Sequence[Sequence] | None = None,
    rotations: Sequence[Matrix] | None = None,
    depth: int | None = None,
    seed: int = 0,
) -> TheoremReport:
    b = vec3(b)
    if not any(b):
        raise PreconditionError("b must be nonzero")
    rotations = default_rotations() if rotations is None else list(rotations)
    targets = default_targets(b) if targets is None else [vec3(t) for t in targets]
    depth = theorem_settings.SPAN_DEPTH if depth is None else depth

    rec = CheckRecorder(THEOREM_ID, seed, scope="specific targets certified up to the search depth")
    identity = Matrix.identity(3)
    for S in rotations:
        if S.T @ S != identity or S.det() != Scalar(1):
            raise PreconditionError("every rotation must be orthogonal with determinant 1")

    for target in targets:
        coeffs = find_combination(b, target, rotations, depth)
        reached = coeffs is not None
        values = {"depth": depth}
        if reached:
            values["coefficients"] = {i: n for i, n in enumerate(coeffs) if n}
            total = (Scalar(0),) * 3
            for S, n in zip(rotations, coeffs):
                if n:
                    total = _add(total, tuple(n * x for x in S @ b), 1)
            reached = total == target
        rec.check(
            f"target {render(target)} in span",
            reached,
            inputs={"b": b, "target": target},
            values=values,
            note=None if reached else "inconclusive at this depth",
        )
    return rec.report()
