# relsim/modules/theorems/__init__.py
"""Verifiers reducing each classification result to exact finite checks and witnesses."""
from .causality import verify_alexandrov_forward, verify_causality_theorems
from .config import TheoremSettings, theorem_settings
from .instances import closed_events, image_events, random_events
from .lattice import verify_lattice_action
from .malament import verify_hogarth, verify_malament
from .newton import verify_conformal_uniqueness, verify_newton_family
from .poincare import join_chain_point, verify_join_meet, verify_poincare_nogo, verify_rest_pencil
from .report import CheckRecorder, SubCheck, TheoremReport
from .span import find_combination, verify_rotation_span
from .subgroups import combination_sweep, verify_subgroup_dichotomy

__all__ = [
    "CheckRecorder",
    "SubCheck",
    "TheoremReport",
    "TheoremSettings",
    "closed_events",
    "combination_sweep",
    "find_combination",
    "image_events",
    "join_chain_point",
    "random_events",
    "theorem_settings",
    "verify_alexandrov_forward",
    "verify_causality_theorems",
    "verify_conformal_uniqueness",
    "verify_hogarth",
    "verify_join_meet",
    "verify_lattice_action",
    "verify_malament",
    "verify_newton_family",
    "verify_poincare_nogo",
    "verify_rest_pencil",
    "verify_rotation_span",
    "verify_subgroup_dichotomy",
]
