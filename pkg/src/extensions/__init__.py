"""Group extensions, sections and the descent computation"""

from .descent import (
    DescentReport,
    QuotientDecomposition,
    centralizing_part,
    decompose_quotient,
    galois_closure_subgroup,
    galois_restriction_subgroups,
    minimal_descent,
    nondescending_example,
    nondescending_model_construction,
    verify_normal_core_identity,
)
from .extension import (
    GroupExtension,
    Section,
    complements_of_kernel,
    direct_product_extension,
    enumerate_sections,
    extension_from_normal_subgroup,
    is_model_galois,
    split_extension,
)

__all__ = [
    "GroupExtension",
    "Section",
    "DescentReport",
    "QuotientDecomposition",
    "split_extension",
    "direct_product_extension",
    "extension_from_normal_subgroup",
    "enumerate_sections",
    "complements_of_kernel",
    "is_model_galois",
    "centralizing_part",
    "minimal_descent",
    "verify_normal_core_identity",
    "decompose_quotient",
    "galois_restriction_subgroups",
    "galois_closure_subgroup",
    "nondescending_model_construction",
    "nondescending_example",
]
