"""Finite groups given by validated Cayley tables.

Elements are the indices ``0..n-1`` and the identity is always index 0.
Tables are immutable numpy arrays, so groups and subgroups can be shared
freely between threads.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Sequence
from functools import cached_property
from typing import Any

import numpy as np

from ..utils.errors import GroupValidationError

logger = logging.getLogger(__name__)

EXHAUSTIVE_ASSOCIATIVITY_ORDER = 64
RANDOM_TRIPLES = 10_000


class FiniteGroup:
    """A finite group stored as its Cayley table."""

    def __init__(
        self,
        table: Any,
        label: str = "G",
        element_names: Sequence[str] | None = None,
        *,
        validate: bool = True,
        exhaustive_order: int = EXHAUSTIVE_ASSOCIATIVITY_ORDER,
        random_triples: int = RANDOM_TRIPLES,
        seed: int = 0,
    ):
        """
        Build and (optionally) validate a group.

        Args:
            table: Square array, ``table[i][j]`` is the index of ``i*j``
            label: Display name
            element_names: Optional display names, one per element
            validate: Check the group axioms (disable only for tables built by construction)
            exhaustive_order: Largest order for which all triples are checked for associativity
            random_triples: Number of random triples checked above that order
            seed: Seed for the random associativity check

        Raises:
            GroupValidationError: If the table does not define a group
        """
        try:
            arr = np.array(table, dtype=np.int64)
        except (TypeError, ValueError) as e:
            raise GroupValidationError(f"table of {label} is not an integer array: {e}") from e

        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GroupValidationError(f"table of {label} must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise GroupValidationError(f"{label} has order 0")
        if arr.min() < 0 or arr.max() >= n:
            raise GroupValidationError(f"table of {label} has entries outside [0, {n})")
        if element_names is not None and len(element_names) != n:
            raise GroupValidationError(f"{label}: expected {n} element names")

        names = list(element_names) if element_names is not None else None
        if validate:
            arr, names = self._normalize_identity(arr, names, label)
            self._check_latin(arr, label)

        inverses = np.argmin(arr, axis=1)
        if validate:
            if not np.array_equal(arr[np.arange(n), inverses], np.zeros(n, dtype=np.int64)):
                raise GroupValidationError(f"{label}: missing right inverses")
            if not np.array_equal(arr[inverses, np.arange(n)], np.zeros(n, dtype=np.int64)):
                raise GroupValidationError(f"{label}: left and right inverses differ")
            self._check_associative(arr, label, exhaustive_order, random_triples, seed)

        arr.setflags(write=False)
        inverses.setflags(write=False)
        self.table = arr
        self.inverses = inverses
        self.label = label
        self.element_names = tuple(names) if names is not None else None

    # ------------------------------------------------------------------ #
    # Validation helpers
    # ------------------------------------------------------------------ #

    @staticmethod
    def _normalize_identity(
        arr: np.ndarray, names: list[str] | None, label: str
    ) -> tuple[np.ndarray, list[str] | None]:
        n = arr.shape[0]
        ident = np.arange(n)
        candidates = [
            e for e in range(n) if np.array_equal(arr[e], ident) and np.array_equal(arr[:, e], ident)
        ]
        if not candidates:
            raise GroupValidationError(f"{label}: no identity element")
        e = candidates[0]
        if e == 0:
            return arr, names

        logger.info(f"{label}: relabelling identity {e} to index 0")
        swap = np.arange(n)
        swap[0], swap[e] = e, 0
        # swap is an involution, so it is its own inverse
        relabelled = swap[arr[np.ix_(swap, swap)]]
        if names is not None:
            names = [names[int(swap[i])] for i in range(n)]
        return relabelled, names

    @staticmethod
    def _check_latin(arr: np.ndarray, label: str) -> None:
        n = arr.shape[0]
        ident = np.arange(n)
        if not (np.sort(arr, axis=1) == ident).all() or not (np.sort(arr, axis=0).T == ident).all():
            raise GroupValidationError(f"{label}: some element has no inverse (table is not a Latin square)")

    @staticmethod
    def _check_associative(
        arr: np.ndarray, label: str, exhaustive_order: int, random_triples: int, seed: int
    ) -> None:
        n = arr.shape[0]
        if n <= exhaustive_order:
            # left[x, y, z] = (xy)z, right[x, y, z] = x(yz)
            left = arr[arr]
            right = arr[:, arr]
            if not np.array_equal(left, right):
                x, y, z = (int(v[0]) for v in np.nonzero(left != right))
                raise GroupValidationError(f"{label}: not associative at ({x}, {y}, {z})")
            return

        rng = np.random.default_rng(seed)
        xs, ys, zs = rng.integers(0, n, size=(3, random_triples))
        left = arr[arr[xs, ys], zs]
        right = arr[xs, arr[ys, zs]]
        bad = np.flatnonzero(left != right)
        if bad.size:
            i = int(bad[0])
            raise GroupValidationError(
                f"{label}: not associative at ({int(xs[i])}, {int(ys[i])}, {int(zs[i])})"
            )

    # ------------------------------------------------------------------ #
    # Element arithmetic
    # ------------------------------------------------------------------ #

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def conjugate(self, x: int, by: int) -> int:
        """Return ``by * x * by^-1``."""
        return int(self.table[self.table[by, x], self.inverses[by]])

    def commutes(self, a: int, b: int) -> bool:
        return bool(self.table[a, b] == self.table[b, a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        result = 0
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, a: int) -> int:
        return int(self.element_orders[a])

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        for a in self.elements:
            x, k = a, 1
            while x != 0:
                x = int(self.table[x, a])
                k += 1
            orders[a] = k
        orders.setflags(write=False)
        return orders

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def check_element(self, x: int) -> int:
        """Return ``x`` as an int, raising if it is not an element index."""
        if not isinstance(x, (int, np.integer)) or isinstance(x, bool) or not 0 <= x < self.order:
            raise GroupValidationError(f"element index {x!r} out of range for {self.label}")
        return int(x)

    def name_of(self, x: int) -> str:
        if self.element_names is not None:
            return self.element_names[x]
        return str(x)

    def to_dict(self) -> dict[str, Any]:
        """Serialize in the group file format."""
        return {"label": self.label, "order": self.order, "table": self.table.tolist()}

    # ------------------------------------------------------------------ #
    # Identity
    # ------------------------------------------------------------------ #

    @cached_property
    def _key(self) -> bytes:
        return self.table.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self is other or (self.order == other.order and self._key == other._key)

    def __hash__(self) -> int:
        return hash((self.order, self._key))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label}, order={self.order})"


class Subgroup:
    """A subgroup of a FiniteGroup, kept as a sorted element list and a bitset."""

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], *, validate: bool = True):
        elems = sorted({parent.check_element(int(x)) for x in elements})
        member = np.zeros(parent.order, dtype=bool)
        member[elems] = True

        if validate:
            if not member[0]:
                raise GroupValidationError(f"subset of {parent.label} does not contain the identity")
            idx = np.array(elems, dtype=np.int64)
            if not member[parent.table[np.ix_(idx, idx)]].all():
                raise GroupValidationError(f"subset of {parent.label} is not closed under products")
            if not member[parent.inverses[idx]].all():
                raise GroupValidationError(f"subset of {parent.label} is not closed under inverses")

        member.setflags(write=False)
        self.parent = parent
        self.elements: tuple[int, ...] = tuple(elems)
        self.members = member
        self.mask = sum(1 << x for x in elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self) -> int:
        return self.parent.order // self.order

    def is_trivial(self) -> bool:
        return self.order == 1

    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_subgroup_of(self, other: Subgroup) -> bool:
        return self.parent == other.parent and (self.mask & ~other.mask) == 0

    def is_normal(self) -> bool:
        """True iff every conjugate of every element stays inside."""
        idx = np.array(self.elements, dtype=np.int64)
        t = self.parent.table
        conj = t[t[:, idx], self.parent.inverses[:, None]]
        return bool(self.members[conj].all())

    def intersection(self, other: Subgroup) -> Subgroup:
        if self.parent != other.parent:
            raise GroupValidationError("cannot intersect subgroups of different groups")
        return Subgroup(
            self.parent, np.flatnonzero(self.members & other.members), validate=False
        )

    def __contains__(self, x: object) -> bool:
        return isinstance(x, (int, np.integer)) and 0 <= x < self.parent.order and bool(self.members[x])

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.mask == other.mask and self.parent == other.parent

    def __hash__(self) -> int:
        return hash((self.parent.order, self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label}: {list(self.elements)})"
