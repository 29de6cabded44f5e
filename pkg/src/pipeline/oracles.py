"""Brute-force reference computations used by verify and the tests.

Each oracle recomputes a quantity from definitions, without the search
engine or vectorized table tricks used elsewhere.
"""

from __future__ import annotations

import logging
from itertools import product

from ..groups import FiniteGroup, Subgroup, all_subgroups
from ..utils.errors import BudgetExceededError

logger = logging.getLogger(__name__)


def brute_force_homs(domain: FiniteGroup, codomain: FiniteGroup, limit: int) -> list[tuple[int, ...]]:
    """
    Image arrays of every homomorphism, found by testing all |codomain|^|domain| maps.

    Raises:
        BudgetExceededError: If the number of maps exceeds ``limit``
    """
    space = codomain.order ** domain.order
    if space > limit:
        raise BudgetExceededError(f"{space} maps {domain.label} -> {codomain.label}", limit)
    found = []
    for images in product(codomain.elements, repeat=domain.order):
        if all(
            images[domain.mul(x, y)] == codomain.mul(images[x], images[y])
            for x in domain.elements
            for y in domain.elements
        ):
            found.append(tuple(images))
    return sorted(found)


def brute_force_centralizer(group: FiniteGroup, targets: list[int]) -> list[int]:
    return [x for x in group.elements if all(group.mul(x, t) == group.mul(t, x) for t in targets)]


def brute_force_center(group: FiniteGroup) -> list[int]:
    return brute_force_centralizer(group, list(group.elements))


def brute_force_conjugates(group: FiniteGroup, sub: Subgroup) -> list[list[int]]:
    """All σ⁻¹Hσ as sorted element lists."""
    conjugates = []
    for sigma in group.elements:
        inv = group.inv(sigma)
        conjugates.append(sorted({group.mul(group.mul(inv, h), sigma) for h in sub.elements}))
    return conjugates


def largest_normal_subgroup_inside(group: FiniteGroup, sub: Subgroup) -> Subgroup:
    """Scan every subgroup of the ambient group contained in ``sub`` for the largest normal one."""
    candidates = [h for h in all_subgroups(group) if h.is_subgroup_of(sub) and h.is_normal()]
    return max(candidates, key=lambda h: h.order)


def brute_force_complements(total: FiniteGroup, kernel_image: Subgroup, quotient_order: int) -> list[list[int]]:
    """Subgroups of order |Q| meeting the kernel image trivially, from the full subgroup list."""
    return [
        list(h.elements)
        for h in all_subgroups(total)
        if h.order == quotient_order and h.intersection(kernel_image).is_trivial()
    ]
