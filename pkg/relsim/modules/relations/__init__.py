# relsim/modules/relations/__init__.py
"""Classified equivalence relations on R^4 and subgroups of (R, +)."""
from .parse import format_relation_spec, parse_relation_spec, parse_subgroup
from .restrict import (
    CausalityResult,
    connected_classes,
    relation_matrix,
    restrict,
    satisfies_causality,
    sim_isotropy,
)
from .specs import (
    ConeSign,
    CosetRelation,
    HalfCone,
    Identity,
    NewtonTypeI,
    NewtonTypeII,
    PencilTypeI,
    PencilTypeII,
    RelationSpec,
    StandardSim,
    Status,
    Total,
    Verdict,
    half_cone,
    related,
    standard_pencil,
)
from .subgroups import (
    Classification,
    RealSubgroupSpec,
    SubgroupClass,
    SubgroupKind,
    classify_subgroup,
    format_subgroup,
    subgroup_contains,
)

__all__ = [
    "CausalityResult",
    "Classification",
    "ConeSign",
    "CosetRelation",
    "HalfCone",
    "Identity",
    "NewtonTypeI",
    "NewtonTypeII",
    "PencilTypeI",
    "PencilTypeII",
    "RealSubgroupSpec",
    "RelationSpec",
    "StandardSim",
    "Status",
    "SubgroupClass",
    "SubgroupKind",
    "Total",
    "Verdict",
    "classify_subgroup",
    "connected_classes",
    "format_relation_spec",
    "format_subgroup",
    "half_cone",
    "parse_relation_spec",
    "parse_subgroup",
    "related",
    "relation_matrix",
    "restrict",
    "satisfies_causality",
    "sim_isotropy",
    "standard_pencil",
    "subgroup_contains",
]
