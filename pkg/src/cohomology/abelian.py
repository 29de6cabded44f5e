"""Cyclic decomposition of finite abelian groups given by Cayley tables."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..groups import FiniteGroup, GroupAction
from ..utils.errors import GroupValidationError, TheoremViolationError
from .smith import as_integer_matrix, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CyclicDecomposition:
    """A ≅ Z/m_1 ⊕ ... ⊕ Z/m_r with m_1 | m_2 | ... | m_r, all m_i > 1."""

    group: FiniteGroup
    factors: tuple[int, ...]
    generators: tuple[int, ...]
    coordinates: np.ndarray  # coordinates[a] = coordinate vector of element a

    @property
    def rank(self) -> int:
        return len(self.factors)

    @cached_property
    def _lookup(self) -> dict[tuple[int, ...], int]:
        return {tuple(int(v) for v in row): a for a, row in enumerate(self.coordinates)}

    def element(self, coords: np.ndarray | list[int]) -> int:
        key = tuple(int(c) % m for c, m in zip(coords, self.factors))
        return self._lookup[key]

    def action_matrices(self, action: GroupAction) -> list[np.ndarray]:
        """T_q with θ_q(g_j) = Σ_i T_q[i, j] g_i."""
        matrices = []
        for q in action.actor.elements:
            columns = [self.coordinates[action.apply(q, g)] for g in self.generators]
            matrices.append(as_integer_matrix(np.array(columns, dtype=np.int64).T.tolist(), (self.rank, self.rank)))
        return matrices


def _power_sum(group: FiniteGroup, weights: list[int]) -> int:
    """Σ_a w_a · a written multiplicatively."""
    result = 0
    for a, w in enumerate(weights):
        if w:
            result = group.mul(result, group.power(a, int(w)))
    return result


def cyclic_decomposition(group: FiniteGroup) -> CyclicDecomposition:
    """
    Invariant-factor decomposition of an abelian group.

    The group is presented on one generator per element with relations
    ``e_a + e_b - e_ab``; the Smith form of that relation matrix gives the
    factors, the coordinate map and the generators.

    Raises:
        GroupValidationError: If the group is not abelian
    """
    if not group.is_abelian:
        raise GroupValidationError(f"{group.label} is not abelian")
    n = group.order
    if n == 1:
        return CyclicDecomposition(group, (), (), np.zeros((1, 0), dtype=np.int64))

    rows = []
    for a in range(1, n):
        for b in range(a, n):
            row = [0] * n
            row[a] += 1
            row[b] += 1
            row[group.mul(a, b)] -= 1
            rows.append(row)
    identity_row = [0] * n
    identity_row[0] = 1
    rows.append(identity_row)

    form = smith_normal_form(rows)
    diagonal = form.diagonal
    keep = [i for i, s in enumerate(diagonal) if s != 1]
    if any(diagonal[i] == 0 for i in keep) or len(diagonal) < n:
        raise TheoremViolationError(f"relation matrix of {group.label} is not of full rank")

    factors = tuple(int(diagonal[i]) for i in keep)
    coordinates = np.array(
        [[int(form.V[a, i]) % factors[k] for k, i in enumerate(keep)] for a in range(n)],
        dtype=np.int64,
    ).reshape(n, len(keep))
    generators = tuple(_power_sum(group, [int(v) for v in form.V_inv[i]]) for i in keep)

    decomposition = CyclicDecomposition(group, factors, generators, coordinates)
    if len(decomposition._lookup) != n:
        raise TheoremViolationError(f"coordinate map of {group.label} is not injective")
    for k, g in enumerate(generators):
        expected = tuple(1 if j == k else 0 for j in range(len(factors)))
        if tuple(int(v) for v in coordinates[g]) != expected:
            raise TheoremViolationError(f"generator {g} of {group.label} has wrong coordinates")
    logger.debug(f"{group.label} decomposes with invariant factors {list(factors)}")
    return decomposition
