"""Smith normal form over the integers with unimodular transforms.

Matrices are numpy object arrays so entries are exact Python ints.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form
from sympy.polys.domains import ZZ

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithForm:
    """``U @ A @ V == S`` with S diagonal, each diagonal entry dividing the next."""

    S: np.ndarray
    U: np.ndarray
    V: np.ndarray
    U_inv: np.ndarray
    V_inv: np.ndarray

    @property
    def diagonal(self) -> list[int]:
        k = min(self.S.shape)
        return [int(self.S[i, i]) for i in range(k)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def as_integer_matrix(values: Any, shape: tuple[int, int] | None = None) -> np.ndarray:
    arr = np.array(values, dtype=object)
    if shape is not None:
        arr = arr.reshape(shape)
    return arr


def identity_matrix(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


class _Reducer:
    """Row and column operations on D, mirrored into U, U⁻¹, V, V⁻¹."""

    def __init__(self, matrix: np.ndarray):
        self.D = matrix.copy()
        m, n = self.D.shape
        self.U, self.U_inv = identity_matrix(m), identity_matrix(m)
        self.V, self.V_inv = identity_matrix(n), identity_matrix(n)

    def swap_rows(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[[i, j]] = self.D[[j, i]]
        self.U[[i, j]] = self.U[[j, i]]
        self.U_inv[:, [i, j]] = self.U_inv[:, [j, i]]

    def swap_cols(self, i: int, j: int) -> None:
        if i == j:
            return
        self.D[:, [i, j]] = self.D[:, [j, i]]
        self.V[:, [i, j]] = self.V[:, [j, i]]
        self.V_inv[[i, j]] = self.V_inv[[j, i]]

    def add_row(self, target: int, source: int, c: int) -> None:
        """row_target += c * row_source"""
        if c == 0:
            return
        self.D[target] += c * self.D[source]
        self.U[target] += c * self.U[source]
        self.U_inv[:, source] -= c * self.U_inv[:, target]

    def add_col(self, target: int, source: int, c: int) -> None:
        """col_target += c * col_source"""
        if c == 0:
            return
        self.D[:, target] += c * self.D[:, source]
        self.V[:, target] += c * self.V[:, source]
        self.V_inv[source] -= c * self.V_inv[target]

    def negate_row(self, i: int) -> None:
        self.D[i] = -self.D[i]
        self.U[i] = -self.U[i]
        self.U_inv[:, i] = -self.U_inv[:, i]

    def pivot_to(self, t: int) -> bool:
        """Move the smallest nonzero entry of D[t:, t:] to (t, t); False if the block is zero."""
        block = self.D[t:, t:]
        nonzero = np.argwhere(block != 0)
        if nonzero.size == 0:
            return False
        i, j = min(nonzero.tolist(), key=lambda ij: (abs(block[ij[0], ij[1]]), ij[0], ij[1]))
        self.swap_rows(t, t + i)
        self.swap_cols(t, t + j)
        return True

    def reduce(self, t: int) -> None:
        m, n = self.D.shape
        while True:
            p = self.D[t, t]
            for i in range(t + 1, m):
                if self.D[i, t] != 0:
                    self.add_row(i, t, -(self.D[i, t] // p))
            for j in range(t + 1, n):
                if self.D[t, j] != 0:
                    self.add_col(j, t, -(self.D[t, j] // p))

            column_clear = not self.D[t + 1 :, t].any()
            row_clear = not self.D[t, t + 1 :].any()
            if not (column_clear and row_clear):
                self.pivot_to(t)
                continue

            rest = self.D[t + 1 :, t + 1 :]
            bad = np.argwhere(rest % p != 0) if rest.size else np.empty((0, 2))
            if len(bad) == 0:
                break
            self.add_row(t, t + 1 + int(bad[0][0]), 1)

        if self.D[t, t] < 0:
            self.negate_row(t)


def smith_normal_form(matrix: Any) -> SmithForm:
    """
    Compute S, U, V (and inverses) with ``U @ A @ V == S``.

    Args:
        matrix: Integer matrix (anything numpy can turn into a 2-D array)

    Returns:
        SmithForm with nonnegative diagonal in divisibility order
    """
    arr = as_integer_matrix(matrix)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    reducer = _Reducer(arr)
    m, n = arr.shape
    for t in range(min(m, n)):
        if not reducer.pivot_to(t):
            break
        reducer.reduce(t)
    return SmithForm(reducer.D, reducer.U, reducer.V, reducer.U_inv, reducer.V_inv)


def integer_kernel(matrix: Any) -> np.ndarray:
    """Columns spanning {x in Z^n : A x = 0}."""
    form = smith_normal_form(matrix)
    return form.V[:, form.rank :]


def invariant_factors_reference(matrix: Any) -> list[int]:
    """Nonzero diagonal of the Smith form as computed by sympy, sorted."""
    arr = as_integer_matrix(matrix)
    if arr.size == 0:
        return []
    snf = sympy_smith_normal_form(Matrix(arr.tolist()), domain=ZZ)
    k = min(snf.shape)
    return sorted(abs(int(snf[i, i])) for i in range(k) if snf[i, i] != 0)
