"""Minimal field of Galois action for a section, computed at the level of groups.

For a section s of ``1 -> G -> Γ -> Q -> 1`` let V = img(s) ∩ C_Γ(ι(G)).
The model given by s becomes Galois exactly over subgroups of π(V), and
img(s)/V embeds into Aut(G) through conjugation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from ..groups import (
    FiniteGroup,
    GroupAction,
    Homomorphism,
    Subgroup,
    all_subgroups,
    automorphism_group,
    normal_core,
    quotient_group,
    semidirect_product,
    subgroup_as_group,
    subgroup_closure,
)
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import GroupValidationError, TheoremViolationError
from .extension import GroupExtension, Section, direct_product_extension, is_model_galois

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DescentReport:
    """Everything minimal_descent computes for one section."""

    section: Section
    V: Subgroup
    GV: Subgroup
    E_subgroup: Subgroup
    galois_group_E: FiniteGroup
    aut_embedding: Homomorphism
    aut_permutations: tuple[tuple[int, ...], ...]
    restriction_subgroups: tuple[Subgroup, ...]

    def to_dict(self) -> dict[str, Any]:
        return {
            "section": list(self.section.images),
            "V": list(self.V.elements),
            "GV": list(self.GV.elements),
            "E_subgroup": list(self.E_subgroup.elements),
            "galois_group_order": self.galois_group_E.order,
            "aut_order": self.aut_embedding.codomain.order,
            "aut_embedding": [list(self.aut_permutations[a]) for a in self.aut_embedding.images],
            "model_galois_over_base": self.E_subgroup.is_whole(),
        }


@dataclass(frozen=True)
class QuotientDecomposition:
    """Γ/V next to G ⋊_γ (img(s)/V) and the explicit map between them."""

    quotient: FiniteGroup
    semidirect: FiniteGroup
    action: GroupAction
    projection_map: Homomorphism
    induced_isomorphism: Homomorphism

    def to_dict(self) -> dict[str, Any]:
        return {
            "quotient_order": self.quotient.order,
            "semidirect_order": self.semidirect.order,
            "acting_order": self.action.actor.order,
            "action_trivial": self.action.is_trivial(),
            "map": list(self.projection_map.images),
        }


def centralizing_part(ext: GroupExtension, section: Section) -> Subgroup:
    """V = img(s) ∩ C_Γ(ι(G))."""
    return section.image.intersection(ext.kernel_centralizer)


def _conjugation_permutation(ext: GroupExtension, m: int) -> tuple[int, ...]:
    """g -> ι⁻¹(m ι(g) m⁻¹) as a permutation of G."""
    total = ext.total
    conj = total.table[total.table[m, ext.iota.array], total.inverses[m]]
    perm = ext.kernel_position[conj]
    if (perm < 0).any():
        raise TheoremViolationError("conjugation does not preserve the image of iota")
    return tuple(int(v) for v in perm)


def _image_quotient(
    ext: GroupExtension, section: Section, V: Subgroup
) -> tuple[FiniteGroup, Homomorphism, Homomorphism]:
    """img(s)/V, the inclusion img(s) -> Γ and the projection img(s) -> img(s)/V."""
    image_group, inclusion = subgroup_as_group(section.image, label="img(s)")
    quotient, projection = quotient_group(image_group, inclusion.preimage(V))
    quotient.label = "img(s)/V"
    return quotient, inclusion, projection


def _coset_representatives(projection: Homomorphism, inclusion: Homomorphism) -> list[int]:
    """Smallest element of Γ (via the inclusion) in each coset, indexed by coset."""
    reps: dict[int, int] = {}
    for local in projection.domain.elements:
        reps.setdefault(projection(local), inclusion(local))
    return [reps[c] for c in range(projection.codomain.order)]


def galois_restriction_subgroups(ext: GroupExtension, section: Section) -> list[Subgroup]:
    """All H ≤ Q over which the restricted model is Galois, i.e. s(H) centralizes ι(G)."""
    centralizing = ext.kernel_centralizer
    return [
        h
        for h in all_subgroups(ext.quotient)
        if centralizing.members[section.map.array[list(h.elements)]].all()
    ]


def galois_closure_subgroup(ext: GroupExtension, section: Section) -> Subgroup:
    """π of the normal core of img(s) in Γ."""
    return ext.pi.image(of=normal_core(ext.total, section.image))


def minimal_descent(
    ext: GroupExtension, section: Section, budget: SearchBudget = DEFAULT_BUDGET
) -> DescentReport:
    """
    Compute V, GV, the subgroup E of Q fixing the minimal field of Galois action,
    Gal(E/K) = img(s)/V and its embedding into Aut(G).

    Raises:
        GroupValidationError: If the section belongs to another extension
        TheoremViolationError: If a structural consequence fails to hold
    """
    if section.extension.total != ext.total:
        raise GroupValidationError("section does not belong to this extension")

    V = centralizing_part(ext, section)
    if not V.is_normal():
        raise TheoremViolationError(f"V is not normal in {ext.total.label}")
    GV = subgroup_closure(ext.total, ext.kernel_image.elements + V.elements)
    E_subgroup = ext.pi.image(of=V)
    if not E_subgroup.is_normal():
        raise TheoremViolationError("E subgroup is not normal in Q")

    galois_group, inclusion, projection = _image_quotient(ext, section, V)
    if galois_group.order * E_subgroup.order != ext.quotient.order:
        raise TheoremViolationError("img(s)/V does not have order |Q/E|")

    aut, perms = automorphism_group(ext.kernel, budget)
    lookup = {p: i for i, p in enumerate(perms)}
    reps = _coset_representatives(projection, inclusion)
    images = [lookup[_conjugation_permutation(ext, m)] for m in reps]
    try:
        embedding = Homomorphism(galois_group, aut, images)
    except GroupValidationError as e:
        raise TheoremViolationError(f"conjugation map into Aut(G) is not a homomorphism: {e}") from e
    if not embedding.is_injective():
        raise TheoremViolationError("img(s)/V does not embed into Aut(G)")

    restriction = galois_restriction_subgroups(ext, section)
    if E_subgroup not in restriction or any(not h.is_subgroup_of(E_subgroup) for h in restriction):
        raise TheoremViolationError("E subgroup is not the largest subgroup with a Galois restriction")

    logger.debug(
        f"{section!r}: |V|={V.order}, |E|={E_subgroup.order}, |Gal(E/K)|={galois_group.order}"
    )
    return DescentReport(
        section=section,
        V=V,
        GV=GV,
        E_subgroup=E_subgroup,
        galois_group_E=galois_group,
        aut_embedding=embedding,
        aut_permutations=tuple(perms),
        restriction_subgroups=tuple(restriction),
    )


def verify_normal_core_identity(ext: GroupExtension, section: Section) -> bool:
    """V equals the normal core of img(s), and so π(core) is the E subgroup."""
    V = centralizing_part(ext, section)
    core = normal_core(ext.total, section.image)
    agrees = V == core and galois_closure_subgroup(ext, section) == ext.pi.image(of=V)
    if not agrees:
        logger.error(f"normal core identity fails for {section!r}: V={V}, core={core}")
    return agrees


def decompose_quotient(ext: GroupExtension, section: Section) -> QuotientDecomposition:
    """
    Build Γ/V and G ⋊_γ (img(s)/V) and check that ``jm -> (j, mV)`` is a
    surjective homomorphism Γ -> G ⋊_γ (img(s)/V) with kernel V.

    Raises:
        TheoremViolationError: If the map fails any of these checks
    """
    V = centralizing_part(ext, section)
    acting, inclusion, projection = _image_quotient(ext, section, V)
    reps = _coset_representatives(projection, inclusion)
    try:
        gamma = GroupAction(acting, ext.kernel, [_conjugation_permutation(ext, m) for m in reps])
    except GroupValidationError as e:
        raise TheoremViolationError(f"γ is not an action: {e}") from e
    sd = semidirect_product(ext.kernel, acting, gamma)

    local = np.full(ext.total.order, -1, dtype=np.int64)
    local[inclusion.array] = np.arange(inclusion.domain.order)
    total = ext.total
    n_acting = acting.order
    images = []
    for x in total.elements:
        m = section.map(ext.pi(x))
        j = int(total.table[x, total.inverses[m]])
        g = int(ext.kernel_position[j])
        if g < 0:
            raise TheoremViolationError(f"x·s(π(x))⁻¹ is outside ι(G) for x={x}")
        images.append(g * n_acting + projection(int(local[m])))

    try:
        phi = Homomorphism(total, sd.group, images)
    except GroupValidationError as e:
        raise TheoremViolationError(f"jm -> (j, mV) is not a homomorphism: {e}") from e
    if phi.kernel() != V or not phi.is_surjective():
        raise TheoremViolationError("jm -> (j, mV) does not have kernel V or is not onto")

    quotient, quotient_map = quotient_group(total, V)
    reps_total = [0] * quotient.order
    for x in reversed(total.elements):
        reps_total[quotient_map(x)] = x
    induced = Homomorphism(quotient, sd.group, [phi(r) for r in reps_total])
    if not induced.is_injective():
        raise TheoremViolationError("induced map Γ/V -> G ⋊ img(s)/V is not injective")
    return QuotientDecomposition(quotient, sd.group, gamma, phi, induced)


def nondescending_model_construction(
    kernel: FiniteGroup, epsilon: Homomorphism, section: Section
) -> Section:
    """
    Twist a Galois section of G×Q -> Q by a surjection ε: Q -> G, giving
    ``s'(q) = (ε(q)·g_s(q), q)`` where ``s(q) = (g_s(q), q)``. The result is a
    section that is not Galois.

    Raises:
        GroupValidationError: If G is abelian, ε is not onto G, the section's
            extension is not G×Q, or img(s) does not centralize G×1
        TheoremViolationError: If the constructed section turns out Galois
    """
    if kernel.is_abelian:
        raise GroupValidationError(f"{kernel.label} is abelian; no noncommuting pair to twist by")
    quotient = epsilon.domain
    if epsilon.codomain != kernel or not epsilon.is_surjective():
        raise GroupValidationError(f"epsilon is not a surjection onto {kernel.label}")
    ext = section.extension
    if not ext.is_direct_product() or ext.kernel != kernel or ext.quotient != quotient:
        raise GroupValidationError("section must belong to the direct product extension G x Q")
    if not is_model_galois(ext, section):
        raise GroupValidationError("img(s) does not centralize G x 1")

    nq = quotient.order
    images = [
        kernel.mul(epsilon(q), section.map(q) // nq) * nq + q for q in quotient.elements
    ]
    twisted = ext.section_from_images(images)
    if is_model_galois(ext, twisted):
        raise TheoremViolationError("twisted section is Galois")
    return twisted


def nondescending_example(kernel: FiniteGroup) -> Section:
    """The construction with Q = G, ε = id and s the trivial graph."""
    ext = direct_product_extension(kernel, kernel)
    assert ext.canonical_section is not None
    return nondescending_model_construction(kernel, Homomorphism.identity(kernel), ext.canonical_section)
