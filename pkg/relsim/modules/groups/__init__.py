# relsim/modules/groups/__init__.py
"""Affine maps of R^4, group constructors and exact membership predicates."""
from . import sampling
from .affine import Affine4, apply, compose, invert
from .constructors import (
    boost,
    boost_parameters,
    boost_x,
    cayley_matrix,
    cube_rotation_matrices,
    cube_rotations,
    dilatation,
    embed_spatial,
    galilei_boost,
    lorentz_reflection,
    orthogonal_part,
    parity,
    rest_isotropy_element,
    rotation_cayley,
    spatial_rotation,
    time_inversion,
    translation,
)
from .io import format_group_element, parse_group_element, read_group_element
from .membership import GroupId, GroupTag, conjugate_isotropy_check, group, isotropy, member
from .sampling import sample_member

__all__ = [
    "Affine4",
    "GroupId",
    "GroupTag",
    "apply",
    "boost",
    "boost_parameters",
    "boost_x",
    "cayley_matrix",
    "compose",
    "conjugate_isotropy_check",
    "cube_rotation_matrices",
    "cube_rotations",
    "dilatation",
    "embed_spatial",
    "format_group_element",
    "galilei_boost",
    "group",
    "invert",
    "isotropy",
    "lorentz_reflection",
    "member",
    "orthogonal_part",
    "parity",
    "parse_group_element",
    "read_group_element",
    "rest_isotropy_element",
    "rotation_cayley",
    "sample_member",
    "sampling",
    "spatial_rotation",
    "time_inversion",
    "translation",
]
