# relsim/modules/spacetime/__init__.py
"""Events, free vectors, Lorentzian forms and causal structure."""
from .causal import (
    UNIT_METRIC,
    CausalClass,
    Classical,
    MetricParams,
    Minkowski,
    SpacetimeKind,
    causal_class,
    causal_order,
    causally_connectible,
    is_future_timelike,
    lorentz_form,
    metric,
    require_future_timelike,
    standard_sim,
)
from .io import format_tuple, parse_event, parse_tuple, parse_vec3, parse_vec4
from .vectors import (
    BASIS,
    E1,
    E2,
    E3,
    E4,
    ORIGIN,
    ZERO_VEC,
    Event,
    Vec3,
    Vec4,
    dot3,
    norm3_sq,
    vec3,
)

__all__ = [
    "BASIS",
    "E1",
    "E2",
    "E3",
    "E4",
    "ORIGIN",
    "UNIT_METRIC",
    "ZERO_VEC",
    "CausalClass",
    "Classical",
    "Event",
    "MetricParams",
    "Minkowski",
    "SpacetimeKind",
    "Vec3",
    "Vec4",
    "causal_class",
    "causal_order",
    "causally_connectible",
    "dot3",
    "format_tuple",
    "is_future_timelike",
    "lorentz_form",
    "metric",
    "norm3_sq",
    "parse_event",
    "parse_tuple",
    "parse_vec3",
    "parse_vec4",
    "require_future_timelike",
    "standard_sim",
    "vec3",
]
