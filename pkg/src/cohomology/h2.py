"""H²(Q, A) for a finite abelian Q-module A, by integer linear algebra.

Normalized n-cochains are vectors indexed by (tuple in (Q \\ {e})^n, factor i)
with the i-th coordinate taken mod m_i. Differentials lift to integer
matrices; the cocycle lattice L is the preimage of M_3·Z under d2, and
H² = L / (im d1 + M_2·Z), read off from Smith normal forms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any

import numpy as np

from ..groups import FiniteGroup, GroupAction, center, subgroup_as_group
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import BudgetExceededError, GroupValidationError, TheoremViolationError
from .abelian import CyclicDecomposition, cyclic_decomposition
from .smith import identity_matrix, invariant_factors_reference, smith_normal_form

logger = logging.getLogger(__name__)

REFERENCE_CHECK_MAX_ROWS = 200
ENUMERATION_MAX_QUOTIENT = 3
ENUMERATION_MAX_MODULE = 4


@dataclass(frozen=True)
class TwoCohomologyGroup:
    """
    H² as invariant factors and one cocycle table per nontrivial factor.

    Each table is the least in its class and the tables are sorted.
    """

    Q: FiniteGroup
    A: FiniteGroup
    invariant_factors: tuple[int, ...]
    representatives: tuple[tuple[tuple[int, ...], ...], ...]

    @property
    def order(self) -> int:
        result = 1
        for f in self.invariant_factors:
            result *= f
        return result

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "invariant_factors": list(self.invariant_factors),
            "representatives": [[list(row) for row in table] for table in self.representatives],
        }


@dataclass
class ObstructionReport:
    center_order: int
    centerless: bool
    h2: TwoCohomologyGroup | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"center_order": self.center_order, "centerless": self.centerless}
        if self.h2 is None:
            data["obstruction_group"] = None
        else:
            data["obstruction_group"] = self.h2.to_dict()
        return data


class CochainComplex:
    """Normalized cochains in degrees 1..3 and the integer lifts of d1, d2."""

    def __init__(self, Q: FiniteGroup, module: CyclicDecomposition, action: GroupAction):
        self.Q = Q
        self.module = module
        self.r = module.rank
        self.T = module.action_matrices(action)
        nonidentity = list(range(1, Q.order))
        self.tuples = {n: list(product(nonidentity, repeat=n)) for n in (1, 2, 3)}
        self.index = {n: {t: k for k, t in enumerate(ts)} for n, ts in self.tuples.items()}

    def dimension(self, n: int) -> int:
        return len(self.tuples[n]) * self.r

    def moduli(self, n: int) -> np.ndarray:
        diag = identity_matrix(self.dimension(n))
        for k in range(len(self.tuples[n])):
            for i, m in enumerate(self.module.factors):
                diag[k * self.r + i, k * self.r + i] = m
        return diag

    def _add(self, matrix: np.ndarray, row_block: int, n: int, args: tuple[int, ...], coeff: np.ndarray) -> None:
        """Add ``coeff`` (r x r) times the cochain value at ``args``, if normalized-nonzero."""
        if 0 in args:
            return
        col_block = self.index[n][args] * self.r
        matrix[row_block : row_block + self.r, col_block : col_block + self.r] += coeff

    def d1(self) -> np.ndarray:
        """(d f)(g, h) = g·f(h) - f(gh) + f(g)."""
        mul = self.Q.mul
        eye = identity_matrix(self.r)
        matrix = np.zeros((self.dimension(2), self.dimension(1)), dtype=object)
        for k, (g, h) in enumerate(self.tuples[2]):
            row = k * self.r
            self._add(matrix, row, 1, (h,), self.T[g])
            self._add(matrix, row, 1, (mul(g, h),), -eye)
            self._add(matrix, row, 1, (g,), eye)
        return matrix

    def d2(self) -> np.ndarray:
        """(d f)(g, h, k) = g·f(h, k) - f(gh, k) + f(g, hk) - f(g, h)."""
        mul = self.Q.mul
        eye = identity_matrix(self.r)
        matrix = np.zeros((self.dimension(3), self.dimension(2)), dtype=object)
        for idx, (g, h, k) in enumerate(self.tuples[3]):
            row = idx * self.r
            self._add(matrix, row, 2, (h, k), self.T[g])
            self._add(matrix, row, 2, (mul(g, h), k), -eye)
            self._add(matrix, row, 2, (g, mul(h, k)), eye)
            self._add(matrix, row, 2, (g, h), -eye)
        return matrix

    def table(self, vector: np.ndarray) -> tuple[tuple[int, ...], ...]:
        """|Q| x |Q| table of module elements for a 2-cochain vector."""
        n = self.Q.order
        rows = [[0] * n for _ in range(n)]
        for k, (g, h) in enumerate(self.tuples[2]):
            coords = [int(vector[k * self.r + i]) for i in range(self.r)]
            rows[g][h] = self.module.element(coords)
        return tuple(tuple(row) for row in rows)


class CoboundaryChain:
    """
    The normalized 2-coboundaries, sifted position by position.

    Tables are flattened row-major. ``levels[p]`` maps every value reachable at
    position ``p`` by a coboundary vanishing before ``p`` to one such coboundary.
    """

    def __init__(self, action: GroupAction, generators: tuple[int, ...]):
        Q, A = action.actor, action.target
        self.A = A
        self.levels: dict[int, dict[int, np.ndarray]] = {}
        n = Q.order
        g, h = np.arange(n)[:, None], np.arange(n)[None, :]
        for q in range(1, n):
            for a in generators:
                f = np.zeros(n, dtype=np.int64)
                f[q] = a
                # (df)(g, h) = g·f(h) - f(gh) + f(g)
                df = A.table[A.table[action.permutations[g, f[h]], A.inverses[f[Q.table]]], f[g]]
                self._sift(df.ravel())

    def _divide(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.A.table[x, self.A.inverses[y]]

    def _sift(self, x: np.ndarray) -> None:
        pending = [x]
        while pending:
            x = pending.pop()
            while (nonzero := np.flatnonzero(x)).size:
                p = int(nonzero[0])
                level = self.levels.setdefault(p, {0: np.zeros_like(x)})
                if int(x[p]) in level:
                    x = self._divide(x, level[int(x[p])])
                    continue
                pending.append(self._extend(level, p, x))
                break

    def _extend(self, level: dict[int, np.ndarray], p: int, x: np.ndarray) -> np.ndarray:
        """Close ``level`` under ``x``; returns the relation x^k / t that vanishes at ``p``."""
        old = list(level.values())
        power = x
        while int(power[p]) not in {int(t[p]) for t in old}:
            for t in old:
                shifted = self.A.table[t, power]
                level[int(shifted[p])] = shifted
            power = self.A.table[power, x]
        return self._divide(power, level[int(power[p])])

    def least(self, table: Any) -> tuple[tuple[int, ...], ...]:
        """The lexicographically least table in the class of ``table``."""
        arr = np.asarray(table, dtype=np.int64)
        x = arr.ravel()
        for p in sorted(self.levels):
            reps = list(self.levels[p].values())
            values = self.A.table[x[p], self.A.inverses[[int(r[p]) for r in reps]]]
            x = self._divide(x, reps[int(np.argmin(values))])
        return tuple(tuple(int(v) for v in row) for row in x.reshape(arr.shape))


def is_two_cocycle(action: GroupAction, table: Any) -> bool:
    """Normalized 2-cocycle identity, written multiplicatively in A."""
    Q, A = action.actor, action.target
    f = np.asarray(table, dtype=np.int64)
    if f.shape != (Q.order, Q.order) or f[0].any() or f[:, 0].any():
        return False
    for g in Q.elements:
        for h in Q.elements:
            for k in Q.elements:
                left = A.mul(action.apply(g, int(f[h, k])), int(f[g, Q.mul(h, k)]))
                right = A.mul(int(f[Q.mul(g, h), k]), int(f[g, h]))
                if left != right:
                    return False
    return True


def _module_action(Q: FiniteGroup, A: FiniteGroup, action: GroupAction | None) -> GroupAction:
    if action is None:
        return GroupAction.trivial(Q, A)
    if action.actor != Q or action.target != A:
        raise GroupValidationError(f"action must be of {Q.label} on {A.label}")
    return action


def h2_abelian(
    Q: FiniteGroup, A: FiniteGroup, action: GroupAction | None = None, budget: SearchBudget = DEFAULT_BUDGET
) -> TwoCohomologyGroup:
    """
    H²(Q, A) via Smith normal forms.

    Raises:
        GroupValidationError: If A is not abelian or the action does not fit
        BudgetExceededError: If the 3-cochain dimension exceeds ``max_cochain_rank``
        TheoremViolationError: If a representative fails the cocycle identity or
            the invariant factors disagree with the reference Smith form
    """
    action = _module_action(Q, A, action)
    module = cyclic_decomposition(A)
    if module.rank == 0 or Q.order == 1:
        return TwoCohomologyGroup(Q, A, (), ())

    complex_ = CochainComplex(Q, module, action)
    d3 = complex_.dimension(3)
    if d3 > budget.max_cochain_rank:
        raise BudgetExceededError(
            f"H2({Q.label}, {A.label}) needs {d3} cochain coordinates in degree 3", budget.max_cochain_rank
        )
    d2_dim = complex_.dimension(2)
    M2, M3 = complex_.moduli(2), complex_.moduli(3)
    D1, D2 = complex_.d1(), complex_.d2()

    # cocycle lattice: x with D2 x ≡ 0 mod M3
    W = np.concatenate([D2, M3], axis=1)
    w_form = smith_normal_form(W)
    spanning = w_form.V[:d2_dim, w_form.rank :]

    k_form = smith_normal_form(spanning)
    s = k_form.diagonal
    if k_form.rank != d2_dim:
        raise TheoremViolationError("cocycle lattice is not of full rank")
    basis = k_form.U_inv[:, :d2_dim] * np.array(s, dtype=object)[None, :]

    # coordinates of im d1 + M2 Z in the lattice basis
    relations = np.concatenate([D1, M2], axis=1)
    scaled = k_form.U[:d2_dim] @ relations
    coords = np.empty_like(scaled)
    for i in range(d2_dim):
        for j in range(scaled.shape[1]):
            q, rem = divmod(scaled[i, j], s[i])
            if rem:
                raise TheoremViolationError("coboundaries are not contained in the cocycle lattice")
            coords[i, j] = q

    c_form = smith_normal_form(coords)
    diagonal = c_form.diagonal
    if d2_dim <= REFERENCE_CHECK_MAX_ROWS:
        reference = invariant_factors_reference(coords)
        if sorted(diagonal) != reference:
            raise TheoremViolationError(f"invariant factors {diagonal} disagree with reference {reference}")

    chain = CoboundaryChain(action, module.generators)
    factors: list[int] = []
    representatives = []
    for i, f in enumerate(diagonal):
        if f == 1:
            continue
        if f == 0:
            raise TheoremViolationError("H2 has an infinite factor")
        vector = basis @ c_form.U_inv[:, i]
        table = chain.least(complex_.table(vector))
        if not is_two_cocycle(action, table):
            raise TheoremViolationError(f"representative for factor {f} is not a 2-cocycle")
        factors.append(int(f))
        representatives.append(table)

    logger.info(f"H2({Q.label}, {A.label}) has invariant factors {factors}")
    return TwoCohomologyGroup(Q, A, tuple(factors), tuple(sorted(representatives)))


def h2_order_by_enumeration(Q: FiniteGroup, A: FiniteGroup, action: GroupAction | None = None) -> int:
    """
    |Z²| / |B²| by listing every normalized table; tiny cases only.

    Raises:
        BudgetExceededError: If |Q| > 3 or |A| > 4
    """
    if Q.order > ENUMERATION_MAX_QUOTIENT:
        raise BudgetExceededError(f"exhaustive H2 needs |Q| small, got {Q.order}", ENUMERATION_MAX_QUOTIENT)
    if A.order > ENUMERATION_MAX_MODULE:
        raise BudgetExceededError(f"exhaustive H2 needs |A| small, got {A.order}", ENUMERATION_MAX_MODULE)
    if not A.is_abelian:
        raise GroupValidationError(f"{A.label} is not abelian")
    action = _module_action(Q, A, action)
    n = Q.order
    pairs = [(g, h) for g in range(1, n) for h in range(1, n)]

    cocycles = 0
    for values in product(A.elements, repeat=len(pairs)):
        table = np.zeros((n, n), dtype=np.int64)
        for (g, h), v in zip(pairs, values):
            table[g, h] = v
        if is_two_cocycle(action, table):
            cocycles += 1

    coboundaries = set()
    for values in product(A.elements, repeat=n - 1):
        f = (0, *values)
        # (df)(g, h) = g·f(h) - f(gh) + f(g)
        table = tuple(
            A.mul(A.mul(action.apply(g, f[h]), A.inv(f[Q.mul(g, h)])), f[g]) for g, h in pairs
        )
        coboundaries.add(table)
    return cocycles // len(coboundaries)


def obstruction_report(
    G: FiniteGroup, Q: FiniteGroup, action: GroupAction | None = None, budget: SearchBudget = DEFAULT_BUDGET
) -> ObstructionReport:
    """
    The group H²(Q, Z(G)) where the obstruction to descending from the field
    of moduli lives. ``action`` may act on G (restricted to the center) or on
    Z(G) already relabelled as a group; None means trivial.

    Raises:
        GroupValidationError: If the action does not preserve Z(G)
    """
    z = center(G)
    if z.is_trivial():
        return ObstructionReport(center_order=1, centerless=True, notes=["centerless: no obstruction group"])

    z_group, _ = subgroup_as_group(z, label=f"Z({G.label})")
    if action is None:
        z_action = GroupAction.trivial(Q, z_group)
    elif action.target == G and action.actor == Q:
        restricted = action.restrict_target(z)
        if restricted is None:
            raise GroupValidationError("action does not preserve the center")
        z_action = GroupAction(Q, z_group, restricted.permutations, validate=False)
    elif action.target == z_group:
        z_action = action
    else:
        raise GroupValidationError(f"action must be on {G.label} or its center")

    h2 = h2_abelian(Q, z_group, z_action, budget)
    return ObstructionReport(center_order=z.order, centerless=False, h2=h2)
