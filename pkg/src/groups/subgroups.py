"""Subgroup algorithms: closures, centralizers, cores and the subgroup lattice."""

from __future__ import annotations

import logging
from collections.abc import Iterable

import numpy as np

from .finite_group import FiniteGroup, Subgroup

logger = logging.getLogger(__name__)


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, [0], validate=False)


def whole_group(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, group.elements, validate=False)


def subgroup_closure(group: FiniteGroup, generators: Iterable[int]) -> Subgroup:
    """Return the subgroup generated by ``generators``."""
    gens = sorted({group.check_element(int(g)) for g in generators} - {0})
    member = np.zeros(group.order, dtype=bool)
    member[0] = True
    frontier = [0]
    table = group.table
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = int(table[x, g])
            if not member[y]:
                member[y] = True
                frontier.append(y)
    return Subgroup(group, np.flatnonzero(member), validate=False)


def join(first: Subgroup, second: Subgroup) -> Subgroup:
    """Smallest subgroup containing both arguments."""
    return subgroup_closure(first.parent, first.elements + second.elements)


def centralizer(group: FiniteGroup, target: Subgroup | Iterable[int]) -> Subgroup:
    """Elements of ``group`` commuting with every element of ``target``."""
    items = target.elements if isinstance(target, Subgroup) else tuple(target)
    idx = np.array([group.check_element(int(t)) for t in items] or [0], dtype=np.int64)
    table = group.table
    commuting = (table[:, idx] == table[idx, :].T).all(axis=1)
    return Subgroup(group, np.flatnonzero(commuting), validate=False)


def center(group: FiniteGroup) -> Subgroup:
    return centralizer(group, group.elements)


def normalizer(group: FiniteGroup, subgroup: Subgroup) -> Subgroup:
    keep = [g for g in group.elements if conjugate_subgroup(subgroup, g) == subgroup]
    return Subgroup(group, keep, validate=False)


def conjugate_subgroup(subgroup: Subgroup, by: int) -> Subgroup:
    """Return ``by * H * by^-1``."""
    group = subgroup.parent
    idx = np.array(subgroup.elements, dtype=np.int64)
    conj = group.table[group.table[by, idx], group.inverses[by]]
    return Subgroup(group, conj, validate=False)


def normal_core(group: FiniteGroup, subgroup: Subgroup) -> Subgroup:
    """Largest normal subgroup of ``group`` contained in ``subgroup``."""
    idx = np.array(subgroup.elements, dtype=np.int64)
    table = group.table
    # x lies in the core iff g^-1 x g is in H for every g
    keep = []
    for x in idx:
        conj = table[table[group.inverses, x], np.arange(group.order)]
        if subgroup.members[conj].all():
            keep.append(int(x))
    return Subgroup(group, keep, validate=False)


def cyclic_subgroups(group: FiniteGroup) -> list[Subgroup]:
    seen: dict[int, Subgroup] = {}
    for x in group.elements:
        sub = subgroup_closure(group, [x])
        seen.setdefault(sub.mask, sub)
    return sorted(seen.values(), key=lambda s: (s.order, s.elements))


def all_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """
    Enumerate every subgroup, sorted by order then elements.

    Every subgroup is a join of cyclic subgroups, so joining the frontier
    with each cyclic subgroup until nothing new appears is exhaustive.
    """
    cyclic = cyclic_subgroups(group)
    found: dict[int, Subgroup] = {s.mask: s for s in cyclic}
    frontier = list(cyclic)
    while frontier:
        fresh: list[Subgroup] = []
        for sub in frontier:
            for c in cyclic:
                if c.is_subgroup_of(sub):
                    continue
                joined = join(sub, c)
                if joined.mask not in found:
                    found[joined.mask] = joined
                    fresh.append(joined)
        frontier = fresh

    result = sorted(found.values(), key=lambda s: (s.order, s.elements))
    logger.debug(f"{group.label}: {len(result)} subgroups")
    return result


def normal_subgroups(group: FiniteGroup) -> list[Subgroup]:
    return [s for s in all_subgroups(group) if s.is_normal()]
