"""Group constructions: products, quotients, subgroups as groups, automorphisms."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import GroupValidationError
from .finite_group import FiniteGroup, Subgroup
from .homomorphisms import GroupAction, Homomorphism, enumerate_homs

logger = logging.getLogger(__name__)


class SemidirectProduct(NamedTuple):
    """``G ⋊ Q`` with its embedding, projection and canonical section."""

    group: FiniteGroup
    iota: Homomorphism
    pi: Homomorphism
    section: Homomorphism


class DirectProduct(NamedTuple):
    group: FiniteGroup
    first: Homomorphism
    second: Homomorphism


def _pair_names(left: FiniteGroup, right: FiniteGroup) -> list[str] | None:
    if left.element_names is None and right.element_names is None:
        return None
    return [f"({left.name_of(a)},{right.name_of(b)})" for a in left.elements for b in right.elements]


def direct_product(left: FiniteGroup, right: FiniteGroup, label: str | None = None) -> DirectProduct:
    """
    Direct product with element ``(a, b)`` at index ``a*|right| + b``.

    Returns the product and its two projections.
    """
    nr = right.order
    idx = np.arange(left.order * nr)
    li, ri = idx // nr, idx % nr
    table = left.table[li[:, None], li[None, :]] * nr + right.table[ri[:, None], ri[None, :]]
    group = FiniteGroup(
        table,
        label=label or f"{left.label}x{right.label}",
        element_names=_pair_names(left, right),
        validate=False,
    )
    return DirectProduct(
        group,
        Homomorphism(group, left, li, validate=False),
        Homomorphism(group, right, ri, validate=False),
    )


def semidirect_product(
    kernel: FiniteGroup, quotient: FiniteGroup, action: GroupAction, label: str | None = None
) -> SemidirectProduct:
    """
    Build ``G ⋊_θ Q`` with ``(g,q)(g',q') = (g·θ_q(g'), qq')``.

    The pair ``(g, q)`` is stored at index ``g*|Q| + q``.

    Raises:
        GroupValidationError: If the action does not act on ``kernel`` by ``quotient``
    """
    if action.actor != quotient or action.target != kernel:
        raise GroupValidationError(
            f"action is of {action.actor.label} on {action.target.label}, "
            f"expected {quotient.label} on {kernel.label}"
        )
    nq = quotient.order
    idx = np.arange(kernel.order * nq)
    gi, qi = idx // nq, idx % nq
    twisted = action.permutations[qi[:, None], gi[None, :]]
    new_g = kernel.table[gi[:, None], twisted]
    new_q = quotient.table[qi[:, None], qi[None, :]]

    default_label = (
        f"{kernel.label}x{quotient.label}" if action.is_trivial() else f"{kernel.label}:{quotient.label}"
    )
    group = FiniteGroup(
        new_g * nq + new_q,
        label=label or default_label,
        element_names=_pair_names(kernel, quotient),
    )
    iota = Homomorphism(kernel, group, np.arange(kernel.order) * nq, validate=False)
    pi = Homomorphism(group, quotient, qi, validate=False)
    section = Homomorphism(quotient, group, np.arange(nq), validate=False)
    logger.debug(f"Built semidirect product {group.label} of order {group.order}")
    return SemidirectProduct(group, iota, pi, section)


def quotient_group(ambient: FiniteGroup, normal: Subgroup) -> tuple[FiniteGroup, Homomorphism]:
    """
    Quotient by a normal subgroup; cosets are ordered by smallest representative.

    Raises:
        GroupValidationError: If the subgroup is not normal
    """
    if normal.parent != ambient:
        raise GroupValidationError("subgroup does not belong to the ambient group")
    if not normal.is_normal():
        raise GroupValidationError(f"subgroup of order {normal.order} is not normal in {ambient.label}")

    coset_of = np.full(ambient.order, -1, dtype=np.int64)
    reps: list[int] = []
    n_idx = np.array(normal.elements, dtype=np.int64)
    for x in ambient.elements:
        if coset_of[x] == -1:
            coset_of[ambient.table[x, n_idx]] = len(reps)
            reps.append(x)

    r = np.array(reps, dtype=np.int64)
    table = coset_of[ambient.table[r[:, None], r[None, :]]]
    names = [ambient.name_of(x) + "N" for x in reps] if ambient.element_names else None
    quotient = FiniteGroup(
        table, label=f"{ambient.label}/N{normal.order}", element_names=names, validate=False
    )
    projection = Homomorphism(ambient, quotient, coset_of, validate=False)
    return quotient, projection


def subgroup_as_group(sub: Subgroup, label: str | None = None) -> tuple[FiniteGroup, Homomorphism]:
    """Relabel a subgroup as a standalone group (elements in ascending order) plus its inclusion."""
    parent = sub.parent
    idx = np.array(sub.elements, dtype=np.int64)
    position = np.full(parent.order, -1, dtype=np.int64)
    position[idx] = np.arange(sub.order)
    table = position[parent.table[np.ix_(idx, idx)]]
    names = [parent.name_of(int(x)) for x in idx] if parent.element_names else None
    group = FiniteGroup(
        table, label=label or f"{parent.label}[{sub.order}]", element_names=names, validate=False
    )
    return group, Homomorphism(group, parent, idx, validate=False)


@lru_cache(maxsize=64)
def _automorphisms(group: FiniteGroup, max_hom_search: int) -> tuple[tuple[int, ...], ...]:
    homs = enumerate_homs(group, group, SearchBudget(max_hom_search=max_hom_search))
    return tuple(sorted(h.images for h in homs if h.is_injective()))


def automorphism_group(
    group: FiniteGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> tuple[FiniteGroup, list[tuple[int, ...]]]:
    """
    Aut(G) as an abstract group plus the matching permutations of G.

    Element ``i`` of the returned group acts as ``perms[i]``; index 0 is the
    identity map. Composition is ``(σ·τ)(x) = σ(τ(x))``.

    Raises:
        BudgetExceededError: If enumerating End(G) exceeds the budget
    """
    perms = list(_automorphisms(group, budget.max_hom_search))
    lookup = {p: i for i, p in enumerate(perms)}
    arr = np.array(perms, dtype=np.int64)
    table = np.array(
        [[lookup[tuple(int(v) for v in arr[i][arr[j]])] for j in range(len(perms))] for i in range(len(perms))],
        dtype=np.int64,
    )
    aut = FiniteGroup(table, label=f"Aut({group.label})", validate=False)
    return aut, perms


def action_from_hom(
    hom: Homomorphism, target: FiniteGroup, perms: list[tuple[int, ...]]
) -> GroupAction:
    """Turn ``Q -> Aut(G)`` (indices into ``perms``) into a permutation action."""
    return GroupAction(hom.domain, target, [perms[hom(q)] for q in hom.domain.elements], validate=False)


def enumerate_actions(
    actor: FiniteGroup, target: FiniteGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> list[GroupAction]:
    """All actions of ``actor`` on ``target`` by automorphisms, trivial action first."""
    aut, perms = automorphism_group(target, budget)
    homs = enumerate_homs(actor, aut, budget)
    return [action_from_hom(h, target, perms) for h in homs]
