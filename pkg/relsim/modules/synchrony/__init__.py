# relsim/modules/synchrony/__init__.py
"""Non-standard synchrony coordinates, light speeds and causality witnesses."""
from .config import SynchronySettings, synchrony_settings
from .coords import InertialCoords, from_prime, lightcone_image, quadratic_value, to_prime
from .directions import negate, pythagorean_directions, require_unit
from .light import (
    CausalityWitness,
    causality_witness,
    m_connectible,
    null_vector,
    one_way_speed,
    two_way_speed,
    witness_violates,
)
from .parse import parse_coords, parse_direction

__all__ = [
    "CausalityWitness",
    "InertialCoords",
    "SynchronySettings",
    "causality_witness",
    "from_prime",
    "lightcone_image",
    "m_connectible",
    "negate",
    "null_vector",
    "one_way_speed",
    "parse_coords",
    "parse_direction",
    "pythagorean_directions",
    "quadratic_value",
    "require_unit",
    "synchrony_settings",
    "to_prime",
    "two_way_speed",
    "witness_violates",
]
