"""
Light propagation seen through non-standard coordinates.
"""
from dataclasses import dataclass

import structlog

from relsim.core.errors import PreconditionError
from relsim.modules.scalar import ONE, Scalar
from relsim.modules.spacetime import CausalClass, Event, Vec3, Vec4, causal_class, dot3, norm3_sq
from .config import synchrony_settings
from .coords import InertialCoords, to_prime
from .directions import negate, pythagorean_directions, require_unit

log = structlog.get_logger(__name__)


def one_way_speed(phi: InertialCoords, n: Vec3) -> Scalar:
    """Coordinate speed c / (1 + c k̄·An) of light moving along the image direction An."""
    require_unit(n)
    return phi.c / (ONE + phi.c * dot3(phi.k, phi.rotate(n)))


def two_way_speed(phi: InertialCoords, n: Vec3) -> Scalar:
    """Round-trip speed along ±n; equals c for every valid phi."""
    there = one_way_speed(phi, n)
    back = one_way_speed(phi, negate(n))
    return 2 / (there.inverse() + back.inverse())


def m_connectible(phi: InertialCoords, p: Event, q: Event) -> bool:
    """φ(q) − φ(p) is a future timelike or null vector."""
    d = to_prime(phi, q) - to_prime(phi, p)
    return causal_class(d, phi.m) in (CausalClass.TIMELIKE_FUTURE, CausalClass.NULL_FUTURE)


def witness_violates(phi: InertialCoords, v: Vec3) -> bool:
    """
    Whether v breaks |v| ≤ c(1 + k̄·Av), decided without square roots.

    A signal of velocity v with |v| ≤ c is causal in standard coordinates;
    the inequality is what its φ′-image needs to stay future causal.
    """
    s = ONE + dot3(phi.k, phi.rotate(v))
    if s.sign() <= 0:
        return True
    return norm3_sq(v) > phi.c * phi.c * s * s


@dataclass(frozen=True)
class CausalityWitness:
    v: Vec3
    exact_direction: bool

    def pair(self) -> tuple[Event, Event]:
        """Events o and (v, 1): causally connectible, but not M-connectible in φ′."""
        return Event(0, 0, 0, 0), Event(*self.v, 1)


def causality_witness(phi: InertialCoords, bound: int | None = None) -> CausalityWitness | None:
    """
    None when k̄ = 0; otherwise a velocity v with |v| = c violating the
    causality inequality. |v| = c reduces the violation to k̄·Av < 0.
    """
    if phi.is_standard:
        return None
    back = tuple(phi.A.T @ phi.k)  # Aᵀk̄
    length = norm3_sq(phi.k).sqrt_exact()
    if length is not None:
        v = tuple(-phi.c * x / length for x in back)
        return CausalityWitness(v, True)

    bound = synchrony_settings.QUADRUPLE_BOUND if bound is None else bound
    best, best_value = None, None
    for n in pythagorean_directions(bound):
        value = dot3(back, n)
        if best_value is None or value < best_value:
            best, best_value = n, value
    if best_value is None or best_value.sign() >= 0:
        raise PreconditionError(f"no violating direction within quadruple bound {bound}")
    v = tuple(phi.c * x for x in best)
    log.debug("Causality witness from direction search", bound=bound, direction=[str(x) for x in best])
    return CausalityWitness(v, False)


def null_vector(n: Vec3, c: Scalar, t: Scalar = ONE) -> Vec4:
    """The null vector (c t n, t) for a unit direction n."""
    return Vec4(*(c * t * x for x in n), t)
