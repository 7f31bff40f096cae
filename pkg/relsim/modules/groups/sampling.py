"""
Random group members built only from the constructors.

Entries are kept small (parameters with numerators and denominators of a
few units) so products of many samples stay cheap to compare exactly.
"""
import random
from fractions import Fraction

from relsim.modules.spacetime import E4, Vec4
from .affine import Affine4
from .constructors import (
    boost,
    boost_parameters,
    dilatation,
    galilei_boost,
    parity,
    rest_isotropy_element,
    rotation_cayley,
    time_inversion,
    translation,
)
from .membership import GroupId, GroupTag


def small_rational(rng: random.Random, bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def positive_rational(rng: random.Random, bound: int = 3) -> Fraction:
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_vec4(rng: random.Random, bound: int = 3) -> Vec4:
    return Vec4(*(small_rational(rng, bound) for _ in range(4)))


def random_rotation(rng: random.Random) -> Affine4:
    return rotation_cayley(*(small_rational(rng, 2) for _ in range(3)))


def random_translation(rng: random.Random) -> Affine4:
    return translation(random_vec4(rng))


def random_time_translation(rng: random.Random) -> Affine4:
    return translation(E4 * small_rational(rng))


def random_dilatation(rng: random.Random) -> Affine4:
    return dilatation(positive_rational(rng))


def random_boost(rng: random.Random, m) -> Affine4:
    gamma, beta_gamma = boost_parameters(rng.randint(1, 3), rng.randint(1, 3))
    axis = rng.randint(1, 3)
    return boost(gamma, beta_gamma, axis, m)


def random_lorentz(rng: random.Random, m, orthochronous: bool = True, proper: bool = True) -> Affine4:
    g = random_boost(rng, m).compose(random_rotation(rng))
    if not orthochronous and rng.random() < 0.5:
        g = g.compose(time_inversion())
    if not proper and rng.random() < 0.5:
        g = g.compose(parity())
    return g


def random_rest_isotropy(rng: random.Random, u: Vec4, m) -> Affine4:
    return rest_isotropy_element(random_vec4(rng), random_vec4(rng), u, m)


def sample_member(G: GroupId, rng: random.Random) -> Affine4:
    """A random member of G; member(sample_member(G, rng), G) holds exactly."""
    tag, m = G.tag, G.m
    if tag is GroupTag.TRANSLATIONS:
        g = random_translation(rng)
    elif tag is GroupTag.SPATIAL_ROTATIONS:
        g = random_rotation(rng)
    elif tag is GroupTag.NEWTON:
        g = random_translation(rng).compose(random_rotation(rng))
    elif tag is GroupTag.GALILEI:
        w = [small_rational(rng) for _ in range(3)]
        g = random_translation(rng).compose(galilei_boost(w)).compose(random_rotation(rng))
    elif tag is GroupTag.CONFORMAL_NEWTON:
        g = random_dilatation(rng).compose(sample_member(GroupId(GroupTag.NEWTON), rng))
    elif tag is GroupTag.CONFORMAL_GALILEI:
        g = random_dilatation(rng).compose(sample_member(GroupId(GroupTag.GALILEI), rng))
    elif tag is GroupTag.TIME_INVERSION_PAIR:
        g = time_inversion() if rng.random() < 0.5 else Affine4.identity()
    elif tag is GroupTag.LORENTZ:
        g = random_lorentz(rng, m, orthochronous=False, proper=False)
    elif tag is GroupTag.ORTHOCHRONOUS_LORENTZ:
        g = random_lorentz(rng, m, proper=False)
    elif tag is GroupTag.PROPER_ORTHOCHRONOUS_LORENTZ:
        g = random_lorentz(rng, m)
    elif tag is GroupTag.POINCARE:
        g = random_translation(rng).compose(random_lorentz(rng, m, orthochronous=False, proper=False))
    elif tag is GroupTag.ORTHOCHRONOUS_PROPER_POINCARE:
        g = random_translation(rng).compose(random_lorentz(rng, m))
    elif tag is GroupTag.CONFORMAL_POINCARE:
        g = random_dilatation(rng).compose(sample_member(GroupId(GroupTag.POINCARE, m=m), rng))
    elif tag is GroupTag.REST_ISOTROPY:
        g = random_translation(rng).compose(random_rest_isotropy(rng, G.u, m))
    elif tag is GroupTag.CONFORMAL_REST_ISOTROPY:
        g = random_translation(rng).compose(random_dilatation(rng)).compose(random_rest_isotropy(rng, G.u, m))
    elif tag is GroupTag.LINE_STABILIZER:
        g = random_time_translation(rng).compose(random_rotation(rng))
        if rng.random() < 0.5:
            g = g.compose(time_inversion())
        if rng.random() < 0.5:
            g = g.compose(parity())
    elif tag is GroupTag.NEWTON_LINE_STABILIZER_CONFORMAL:
        g = random_time_translation(rng).compose(random_dilatation(rng)).compose(random_rotation(rng))
    elif tag is GroupTag.LINE_STABILIZER_CONFORMAL:
        g = sample_member(GroupId(GroupTag.NEWTON_LINE_STABILIZER_CONFORMAL), rng)
        if rng.random() < 0.5:
            g = g.compose(time_inversion())
    else:
        raise ValueError(f"no sampler for {tag!r}")
    if G.frame is not None:
        g = g.conjugate_by(G.frame.invert())
    return g
