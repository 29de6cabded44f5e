"""Exact finite-group kernel"""

from .catalog import CATALOG_LISTING, build_group, catalog_listing, group_from_name
from .constructions import (
    DirectProduct,
    SemidirectProduct,
    action_from_hom,
    automorphism_group,
    direct_product,
    enumerate_actions,
    quotient_group,
    semidirect_product,
    subgroup_as_group,
)
from .finite_group import FiniteGroup, Subgroup
from .homomorphisms import (
    BacktrackSearch,
    GroupAction,
    HomClass,
    Homomorphism,
    canonical_conjugate,
    conjugacy_partition_homs,
    enumerate_homs,
    minimal_generating_sequence,
)
from .subgroups import (
    all_subgroups,
    center,
    centralizer,
    join,
    normal_core,
    normal_subgroups,
    subgroup_closure,
    trivial_subgroup,
    whole_group,
)

__all__ = [
    "FiniteGroup",
    "Subgroup",
    "Homomorphism",
    "GroupAction",
    "HomClass",
    "BacktrackSearch",
    "DirectProduct",
    "SemidirectProduct",
    "CATALOG_LISTING",
    "build_group",
    "group_from_name",
    "catalog_listing",
    "centralizer",
    "center",
    "normal_core",
    "subgroup_closure",
    "join",
    "all_subgroups",
    "normal_subgroups",
    "trivial_subgroup",
    "whole_group",
    "quotient_group",
    "semidirect_product",
    "direct_product",
    "subgroup_as_group",
    "automorphism_group",
    "action_from_hom",
    "enumerate_actions",
    "enumerate_homs",
    "minimal_generating_sequence",
    "canonical_conjugate",
    "conjugacy_partition_homs",
]
