"""Nonabelian H¹(Q, G) with coefficients twisted by an action θ."""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from ..groups import BacktrackSearch, FiniteGroup, GroupAction, minimal_generating_sequence
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import BudgetExceededError, GroupValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OneCocycle:
    """z: Q -> G with z(ab) = z(a)·θ_a(z(b))."""

    action: GroupAction
    values: tuple[int, ...]

    @property
    def Q(self) -> FiniteGroup:
        return self.action.actor

    @property
    def G(self) -> FiniteGroup:
        return self.action.target

    def is_cocycle(self) -> bool:
        """Check the cocycle identity on all pairs."""
        G, Q = self.G, self.Q
        z = np.array(self.values, dtype=np.int64)
        if z[0] != 0:
            return False
        twisted = self.action.permutations[:, z]  # twisted[a, b] = θ_a(z(b))
        lhs = z[Q.table]
        rhs = G.table[z[:, None], twisted]
        return bool(np.array_equal(lhs, rhs))

    def coboundary_shift(self, g: int) -> tuple[int, ...]:
        """q -> g⁻¹·z(q)·θ_q(g)."""
        G = self.G
        z = np.array(self.values, dtype=np.int64)
        shifted = G.table[G.table[G.inverses[g], z], self.action.permutations[:, g]]
        return tuple(int(v) for v in shifted)

    def canonical(self) -> tuple[int, ...]:
        return min(self.coboundary_shift(g) for g in self.G.elements)


@dataclass(frozen=True)
class CocycleClass:
    canonical: tuple[int, ...]
    members: tuple[OneCocycle, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def enumerate_cocycles(action: GroupAction, budget: SearchBudget = DEFAULT_BUDGET) -> list[OneCocycle]:
    """
    Z¹(Q, G) by the shared backtracking engine, deterministic order.

    Raises:
        BudgetExceededError: If |G|^(generator count of Q) exceeds the hom-search budget
    """
    Q, G = action.actor, action.target
    space = G.order ** len(minimal_generating_sequence(Q))
    if space > budget.max_hom_search:
        raise BudgetExceededError(f"Z1({Q.label}, {G.label}) needs {space} candidate assignments", budget.max_hom_search)

    table = G.table
    perms = action.permutations

    def combine(a: int, za: int, g: int, zg: int) -> int:
        return int(table[za, perms[a, zg]])

    def candidates(g: int) -> range:
        return G.elements

    search = BacktrackSearch(Q, combine, candidates, budget, label=f"Z1({Q.label}, {G.label})")
    return [OneCocycle(action, values) for values in search.run()]


def h1_classes(
    Q: FiniteGroup, G: FiniteGroup, action: GroupAction | None = None, budget: SearchBudget = DEFAULT_BUDGET
) -> list[CocycleClass]:
    """
    H¹(Q, G): cocycles up to z ~ (q -> g⁻¹·z(q)·θ_q(g)), sorted by canonical form.

    Raises:
        GroupValidationError: If the action is not of Q on G
        BudgetExceededError: If the cocycle search exceeds the budget
    """
    if action is None:
        action = GroupAction.trivial(Q, G)
    if action.actor != Q or action.target != G:
        raise GroupValidationError(f"action must be of {Q.label} on {G.label}")

    classes: dict[tuple[int, ...], list[OneCocycle]] = {}
    cocycles = enumerate_cocycles(action, budget)
    for z in cocycles:
        classes.setdefault(z.canonical(), []).append(z)
    result = [CocycleClass(key, tuple(classes[key])) for key in sorted(classes)]
    logger.info(f"H1({Q.label}, {G.label}): {len(cocycles)} cocycles in {len(result)} classes")
    return result
