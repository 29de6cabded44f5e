"""Twisted models, point counts and specialization"""

from .models import (
    ModelClass,
    PointClass,
    TwistAction,
    TwistModel,
    classify_models,
    count_rational_points,
    fixed_points,
    galois_conjugates,
    graph_subgroup,
    identity_stabilizer,
    is_twist_galois,
    minimal_galois_subgroup,
    model_section,
    restrict_model,
    twist_action,
)
from .specialization import (
    CruxReport,
    SpecializationReport,
    central_homs,
    crux_check,
    is_g_galois_specialization,
    model_independence_check,
    point_partition,
    pointwise_product,
    specialization_join,
    specialization_report,
    specialization_subgroup,
)

__all__ = [
    "TwistModel",
    "PointClass",
    "TwistAction",
    "ModelClass",
    "CruxReport",
    "SpecializationReport",
    "twist_action",
    "fixed_points",
    "count_rational_points",
    "is_twist_galois",
    "graph_subgroup",
    "identity_stabilizer",
    "model_section",
    "minimal_galois_subgroup",
    "restrict_model",
    "galois_conjugates",
    "classify_models",
    "specialization_subgroup",
    "specialization_join",
    "is_g_galois_specialization",
    "central_homs",
    "pointwise_product",
    "crux_check",
    "point_partition",
    "specialization_report",
    "model_independence_check",
]
