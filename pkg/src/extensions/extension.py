"""Group extensions ``1 -> G -> Γ -> Q -> 1``, their sections and complements."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from functools import cached_property

import numpy as np

from ..groups import (
    BacktrackSearch,
    FiniteGroup,
    GroupAction,
    Homomorphism,
    Subgroup,
    centralizer,
    minimal_generating_sequence,
    quotient_group,
    semidirect_product,
    subgroup_as_group,
    subgroup_closure,
)
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import BudgetExceededError, GroupValidationError, TheoremViolationError

logger = logging.getLogger(__name__)


class GroupExtension:
    """An exact sequence ``1 -> kernel -> total -> quotient -> 1``."""

    def __init__(
        self,
        kernel: FiniteGroup,
        total: FiniteGroup,
        quotient: FiniteGroup,
        iota: Homomorphism,
        pi: Homomorphism,
        canonical_section: Homomorphism | None = None,
        *,
        split_action: GroupAction | None = None,
    ):
        """
        Raises:
            GroupValidationError: If the maps do not fit or the sequence is not exact
        """
        if iota.domain != kernel or iota.codomain != total:
            raise GroupValidationError("iota must map the kernel group into the total group")
        if pi.domain != total or pi.codomain != quotient:
            raise GroupValidationError("pi must map the total group onto the quotient group")
        if not iota.is_injective():
            raise GroupValidationError("iota is not injective")
        if not pi.is_surjective():
            raise GroupValidationError("pi is not surjective")
        if iota.image() != pi.kernel():
            raise GroupValidationError("image of iota differs from kernel of pi (sequence not exact)")

        self.kernel = kernel
        self.total = total
        self.quotient = quotient
        self.iota = iota
        self.pi = pi
        self.split_action = split_action
        self.canonical_section = (
            Section(self, canonical_section) if canonical_section is not None else None
        )

    @cached_property
    def kernel_image(self) -> Subgroup:
        return self.iota.image()

    @cached_property
    def kernel_centralizer(self) -> Subgroup:
        """C_Γ(ι(G))."""
        return centralizer(self.total, self.kernel_image)

    @cached_property
    def kernel_position(self) -> np.ndarray:
        """Inverse of iota on its image; -1 elsewhere."""
        position = np.full(self.total.order, -1, dtype=np.int64)
        position[self.iota.array] = np.arange(self.kernel.order)
        return position

    def fiber(self, q: int) -> list[int]:
        """π⁻¹(q) in ascending order."""
        return [int(x) for x in np.flatnonzero(self.pi.array == q)]

    def is_direct_product(self) -> bool:
        return self.split_action is not None and self.split_action.is_trivial()

    def section_from_images(self, images: Sequence[int]) -> Section:
        return Section(self, Homomorphism(self.quotient, self.total, images))

    def __repr__(self) -> str:
        return (
            f"GroupExtension({self.kernel.label} -> {self.total.label} -> {self.quotient.label})"
        )


class Section:
    """A homomorphic right inverse of the projection."""

    def __init__(self, extension: GroupExtension, map: Homomorphism):
        """
        Raises:
            GroupValidationError: If ``map`` is not a section of ``extension``
        """
        if map.domain != extension.quotient or map.codomain != extension.total:
            raise GroupValidationError("section must map the quotient group into the total group")
        if not np.array_equal(extension.pi.array[map.array], np.arange(extension.quotient.order)):
            raise GroupValidationError("pi composed with the section is not the identity")
        self.extension = extension
        self.map = map

    @cached_property
    def image(self) -> Subgroup:
        return self.map.image()

    @property
    def images(self) -> tuple[int, ...]:
        return self.map.images

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Section):
            return NotImplemented
        return self.extension is other.extension and self.map == other.map

    def __hash__(self) -> int:
        return hash(self.map)

    def __repr__(self) -> str:
        return f"Section({list(self.map.images)})"


def split_extension(
    kernel: FiniteGroup, quotient: FiniteGroup, action: GroupAction
) -> GroupExtension:
    """``G ⋊_θ Q`` as an extension carrying its canonical section ``q -> (e, q)``."""
    sd = semidirect_product(kernel, quotient, action)
    return GroupExtension(
        kernel, sd.group, quotient, sd.iota, sd.pi, sd.section, split_action=action
    )


def direct_product_extension(kernel: FiniteGroup, quotient: FiniteGroup) -> GroupExtension:
    return split_extension(kernel, quotient, GroupAction.trivial(quotient, kernel))


def extension_from_normal_subgroup(total: FiniteGroup, normal: Subgroup) -> GroupExtension:
    """``1 -> N -> Γ -> Γ/N -> 1`` for a normal subgroup N."""
    kernel, inclusion = subgroup_as_group(normal, label=f"N{normal.order}")
    quotient, projection = quotient_group(total, normal)
    return GroupExtension(kernel, total, quotient, inclusion, projection)


def _check_search_space(ext: GroupExtension, budget: SearchBudget, what: str) -> None:
    gens = minimal_generating_sequence(ext.quotient)
    space = ext.kernel.order ** len(gens)
    if space > budget.max_hom_search:
        raise BudgetExceededError(f"{what} of {ext!r} needs {space} candidate assignments", budget.max_hom_search)


def enumerate_sections(ext: GroupExtension, budget: SearchBudget = DEFAULT_BUDGET) -> list[Section]:
    """
    Every section of ``pi`` in deterministic order; empty when the extension does not split.

    Candidates for a generator q are the elements of π⁻¹(q), so π∘s = id holds
    throughout the search.

    Raises:
        BudgetExceededError: If |G|^(generator count of Q) exceeds the hom-search budget
    """
    _check_search_space(ext, budget, "section search")
    table = ext.total.table

    def combine(a: int, sa: int, g: int, sg: int) -> int:
        return int(table[sa, sg])

    search = BacktrackSearch(ext.quotient, combine, ext.fiber, budget, label=f"sections of {ext!r}")
    sections = [
        Section(ext, Homomorphism(ext.quotient, ext.total, images, validate=False))
        for images in search.run()
    ]
    logger.info(f"{ext!r}: {len(sections)} sections")
    return sections


def complements_of_kernel(ext: GroupExtension, budget: SearchBudget = DEFAULT_BUDGET) -> list[Subgroup]:
    """
    Subgroups H of Γ with H ∩ ι(G) = {e} and π(H) = Q, sorted by elements.

    Computed without the section search: every lift of a generating sequence of
    Q is closed up, and the closure is a complement exactly when its order is |Q|.
    """
    _check_search_space(ext, budget, "complement scan")
    gens = minimal_generating_sequence(ext.quotient)
    fibers = [ext.fiber(q) for q in gens]
    found: dict[int, Subgroup] = {}

    def walk(depth: int, chosen: list[int]) -> None:
        if depth == len(gens):
            closure = subgroup_closure(ext.total, chosen)
            if closure.order == ext.quotient.order:
                found.setdefault(closure.mask, closure)
            return
        for x in fibers[depth]:
            walk(depth + 1, [*chosen, x])

    walk(0, [])
    return sorted(found.values(), key=lambda h: h.elements)


def is_model_galois(ext: GroupExtension, section: Section) -> bool:
    """
    True iff the section's image commutes with ι(G).

    Normality of the image in Γ is computed independently and must agree.

    Raises:
        GroupValidationError: If the section belongs to another extension
        TheoremViolationError: If the two criteria disagree
    """
    if section.extension is not ext and section.extension.total != ext.total:
        raise GroupValidationError("section does not belong to this extension")
    centralizes = section.image.is_subgroup_of(ext.kernel_centralizer)
    normal = section.image.is_normal()
    if centralizes != normal:
        raise TheoremViolationError(
            f"Galois criteria disagree for {section!r}: centralizes={centralizes}, normal={normal}"
        )
    return centralizes
