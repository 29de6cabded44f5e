"""Homomorphisms, group actions and the backtracking search behind them.

The same depth-first engine enumerates homomorphisms, sections of an
extension and 1-cocycles: each is a map out of a finite group determined by
its values on a generating sequence and extended by a multiplicative rule.
"""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import Any

import numpy as np

from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import BudgetExceededError, GroupValidationError
from .finite_group import FiniteGroup, Subgroup
from .subgroups import subgroup_closure

logger = logging.getLogger(__name__)

# combine(a, value_at_a, g, value_at_g) -> value at a*g
CombineRule = Callable[[int, int, int, int], int]


class Homomorphism:
    """A multiplicative map between two finite groups, stored as an image array."""

    def __init__(
        self,
        domain: FiniteGroup,
        codomain: FiniteGroup,
        images: Sequence[int] | np.ndarray,
        *,
        validate: bool = True,
    ):
        try:
            arr = np.array(images, dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise GroupValidationError(f"images are not integers: {e}") from e
        if arr.shape != (domain.order,):
            raise GroupValidationError(
                f"map {domain.label} -> {codomain.label} needs {domain.order} images, got {arr.size}"
            )
        if arr.min() < 0 or arr.max() >= codomain.order:
            raise GroupValidationError(f"image index out of range for {codomain.label}")

        if validate:
            if arr[0] != 0:
                raise GroupValidationError("identity is not mapped to identity")
            lhs = arr[domain.table]
            rhs = codomain.table[arr[:, None], arr[None, :]]
            if not np.array_equal(lhs, rhs):
                x, y = (int(v[0]) for v in np.nonzero(lhs != rhs))
                raise GroupValidationError(
                    f"map {domain.label} -> {codomain.label} is not multiplicative at ({x}, {y})"
                )

        arr.setflags(write=False)
        self.domain = domain
        self.codomain = codomain
        self.array = arr
        self.images: tuple[int, ...] = tuple(int(x) for x in arr)

    @classmethod
    def identity(cls, group: FiniteGroup) -> Homomorphism:
        return cls(group, group, np.arange(group.order), validate=False)

    @classmethod
    def trivial(cls, domain: FiniteGroup, codomain: FiniteGroup) -> Homomorphism:
        return cls(domain, codomain, np.zeros(domain.order, dtype=np.int64), validate=False)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def image(self, of: Subgroup | None = None) -> Subgroup:
        source = self.array if of is None else self.array[list(of.elements)]
        return Subgroup(self.codomain, source, validate=False)

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, np.flatnonzero(self.array == 0), validate=False)

    def preimage(self, target: Subgroup) -> Subgroup:
        return Subgroup(self.domain, np.flatnonzero(target.members[self.array]), validate=False)

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.domain.order

    def is_surjective(self) -> bool:
        return len(set(self.images)) == self.codomain.order

    def is_trivial(self) -> bool:
        return not self.array.any()

    def compose(self, inner: Homomorphism) -> Homomorphism:
        """Return ``self ∘ inner``."""
        if inner.codomain != self.domain:
            raise GroupValidationError("cannot compose: codomain and domain differ")
        return Homomorphism(inner.domain, self.codomain, self.array[inner.array], validate=False)

    def conjugated(self, by: int) -> Homomorphism:
        """Pointwise conjugate ``x -> by * f(x) * by^-1``."""
        g = self.codomain
        arr = g.table[g.table[by, self.array], g.inverses[by]]
        return Homomorphism(self.domain, self.codomain, arr, validate=False)

    def restrict(self, inclusion: Homomorphism) -> Homomorphism:
        """Restrict along an inclusion ``H -> domain``."""
        return self.compose(inclusion)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (
            self.images == other.images
            and self.domain == other.domain
            and self.codomain == other.codomain
        )

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Homomorphism({self.domain.label} -> {self.codomain.label}: {list(self.images)})"


class GroupAction:
    """An action of ``actor`` on ``target`` by automorphisms, one permutation per actor element."""

    def __init__(
        self,
        actor: FiniteGroup,
        target: FiniteGroup,
        permutations: Any,
        *,
        validate: bool = True,
    ):
        try:
            perms = np.array(permutations, dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise GroupValidationError(f"action permutations are not integers: {e}") from e
        if perms.shape != (actor.order, target.order):
            raise GroupValidationError(
                f"action of {actor.label} on {target.label} needs a "
                f"{actor.order}x{target.order} permutation table, got shape {perms.shape}"
            )

        if validate:
            ident = np.arange(target.order)
            if not (np.sort(perms, axis=1) == ident).all():
                raise GroupValidationError("action entries are not permutations")
            t = target.table
            for q in actor.elements:
                p = perms[q]
                if not np.array_equal(p[t], t[p[:, None], p[None, :]]):
                    raise GroupValidationError(
                        f"action of element {q} is not an automorphism of {target.label}"
                    )
            # composed[a, b, x] = perm_a(perm_b(x))
            composed = perms[np.arange(actor.order)[:, None, None], perms[None, :, :]]
            if not np.array_equal(perms[actor.table], composed):
                raise GroupValidationError("action is not multiplicative")

        perms.setflags(write=False)
        self.actor = actor
        self.target = target
        self.permutations = perms

    @classmethod
    def trivial(cls, actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
        perms = np.tile(np.arange(target.order), (actor.order, 1))
        return cls(actor, target, perms, validate=False)

    def apply(self, q: int, g: int) -> int:
        """Return ``theta_q(g)``."""
        return int(self.permutations[q, g])

    def is_trivial(self) -> bool:
        return bool((self.permutations == np.arange(self.target.order)).all())

    def restrict_target(self, sub: Subgroup) -> GroupAction | None:
        """Restrict to an invariant subgroup, relabelled as a standalone group, or None if not invariant."""
        from .constructions import subgroup_as_group

        if not sub.members[self.permutations[:, list(sub.elements)]].all():
            return None
        group, _ = subgroup_as_group(sub)
        position = np.full(self.target.order, -1, dtype=np.int64)
        position[list(sub.elements)] = np.arange(sub.order)
        perms = position[self.permutations[:, list(sub.elements)]]
        return GroupAction(self.actor, group, perms, validate=False)

    def to_list(self) -> list[list[int]]:
        return self.permutations.tolist()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupAction):
            return NotImplemented
        return (
            self.actor == other.actor
            and self.target == other.target
            and np.array_equal(self.permutations, other.permutations)
        )

    def __hash__(self) -> int:
        return hash(self.permutations.tobytes())

    def __repr__(self) -> str:
        kind = "trivial" if self.is_trivial() else "nontrivial"
        return f"GroupAction({self.actor.label} on {self.target.label}, {kind})"


@lru_cache(maxsize=256)
def minimal_generating_sequence(group: FiniteGroup) -> tuple[int, ...]:
    """
    Greedy generating sequence: repeatedly add the element that enlarges the
    generated subgroup most, lowest index on ties.
    """
    gens: list[int] = []
    current = subgroup_closure(group, [])
    while not current.is_whole():
        best_x, best = -1, current
        for x in group.elements:
            if x in current:
                continue
            candidate = subgroup_closure(group, [*gens, x])
            if candidate.order > best.order:
                best_x, best = x, candidate
        gens.append(best_x)
        current = best
    return tuple(gens)


class BacktrackSearch:
    """
    Depth-first assignment of generator values with multiplicative propagation.

    ``candidates(g)`` lists the admissible values at generator ``g`` and
    ``combine`` extends known values to products. A branch is rejected as soon
    as two derivations of the same element disagree.
    """

    def __init__(
        self,
        domain: FiniteGroup,
        combine: CombineRule,
        candidates: Callable[[int], Sequence[int]],
        budget: SearchBudget = DEFAULT_BUDGET,
        label: str = "search",
    ):
        self.domain = domain
        self.combine = combine
        self.generators = minimal_generating_sequence(domain)
        self.choices = [list(candidates(g)) for g in self.generators]
        self.label = label

        space = prod(len(c) for c in self.choices)
        if space > budget.max_hom_search:
            raise BudgetExceededError(
                f"{label}: {space} candidate generator assignments exceed the search budget",
                budget.max_hom_search,
            )

    def run(self) -> list[tuple[int, ...]]:
        values = [-1] * self.domain.order
        values[0] = 0
        results: list[tuple[int, ...]] = []
        self._descend(0, values, [0], results)
        logger.debug(f"{self.label}: {len(results)} solutions")
        return results

    def _descend(
        self, depth: int, values: list[int], assigned: list[int], results: list[tuple[int, ...]]
    ) -> None:
        if depth == len(self.generators):
            results.append(tuple(values))
            return
        g = self.generators[depth]
        for v in self.choices[depth]:
            trial = values.copy()
            trial[g] = v
            extended = self._propagate(trial, [*assigned, g], depth + 1)
            if extended is not None:
                self._descend(depth + 1, trial, extended, results)

    def _propagate(self, values: list[int], assigned: list[int], active: int) -> list[int] | None:
        table = self.domain.table
        gens = self.generators[:active]
        queue = list(assigned)
        seen = set(assigned)
        i = 0
        while i < len(queue):
            a = queue[i]
            i += 1
            for g in gens:
                b = int(table[a, g])
                w = self.combine(a, values[a], g, values[g])
                if values[b] == -1:
                    values[b] = w
                elif values[b] != w:
                    return None
                if b not in seen:
                    seen.add(b)
                    queue.append(b)
        return queue


def enumerate_homs(
    domain: FiniteGroup, codomain: FiniteGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> list[Homomorphism]:
    """
    Every homomorphism ``domain -> codomain`` exactly once, in deterministic order.

    Raises:
        BudgetExceededError: If |codomain|^(generator count) exceeds the hom-search budget
    """
    gens = minimal_generating_sequence(domain)
    space = codomain.order ** len(gens)
    if space > budget.max_hom_search:
        raise BudgetExceededError(
            f"Hom({domain.label}, {codomain.label}) needs {space} candidate assignments",
            budget.max_hom_search,
        )

    table = codomain.table
    orders = codomain.element_orders

    def candidates(g: int) -> list[int]:
        n = domain.element_order(g)
        return [int(x) for x in codomain.elements if n % int(orders[x]) == 0]

    def combine(a: int, fa: int, g: int, fg: int) -> int:
        return int(table[fa, fg])

    search = BacktrackSearch(
        domain, combine, candidates, budget, label=f"Hom({domain.label}, {codomain.label})"
    )
    homs = [Homomorphism(domain, codomain, images, validate=False) for images in search.run()]
    logger.debug(f"Hom({domain.label}, {codomain.label}): {len(homs)} homomorphisms")
    return homs


def canonical_conjugate(hom: Homomorphism) -> tuple[int, ...]:
    """Lexicographically smallest images array among the pointwise conjugates."""
    g = hom.codomain
    conj = g.table[g.table[:, hom.array], g.inverses[:, None]]
    return min(tuple(int(v) for v in row) for row in conj)


@dataclass(frozen=True)
class HomClass:
    """One conjugacy class of homomorphisms with its canonical representative."""

    canonical: tuple[int, ...]
    members: tuple[Homomorphism, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def representative(self) -> Homomorphism:
        first = self.members[0]
        return Homomorphism(first.domain, first.codomain, self.canonical, validate=False)


def conjugacy_partition_homs(
    homs: Iterable[Homomorphism], codomain: FiniteGroup | None = None
) -> list[HomClass]:
    """
    Partition homomorphisms under pointwise conjugation in the codomain.

    Classes are returned sorted by canonical representative; members keep input order.

    Raises:
        GroupValidationError: If the homomorphisms do not share domain and codomain
    """
    homs = list(homs)
    if not homs:
        return []
    domain = homs[0].domain
    target = codomain if codomain is not None else homs[0].codomain
    for h in homs:
        if h.domain != domain or h.codomain != target:
            raise GroupValidationError("homomorphisms have mixed domains or codomains")

    classes: dict[tuple[int, ...], list[Homomorphism]] = {}
    for h in homs:
        classes.setdefault(canonical_conjugate(h), []).append(h)
    return [HomClass(key, tuple(classes[key])) for key in sorted(classes)]
