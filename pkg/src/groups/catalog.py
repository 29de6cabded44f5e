"""Named groups and group-spec parsing.

Catalog names are ``C<n>``, ``S<n>`` and ``A<n>`` (n <= 5), ``D<n>`` (dihedral
of order 2n), ``Q8``, ``V4`` and ``<name>x<name>`` for direct products.
"""

from __future__ import annotations

import logging
import re
from functools import lru_cache
from typing import Any

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import AlternatingGroup, DihedralGroup, SymmetricGroup

from ..utils.errors import GroupValidationError
from .constructions import automorphism_group, direct_product
from .finite_group import FiniteGroup
from .subgroups import center

logger = logging.getLogger(__name__)

MAX_CATALOG_ORDER = 1000

CATALOG_LISTING = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8",
    "V4", "S3", "D4", "Q8", "D5", "A4", "D6", "C2xC2xC2", "C2xS3", "S4", "A5",
)  # fmt: skip

_TOKEN = re.compile(r"^(?:(?P<family>[CSAD])(?P<n>\d+)|(?P<special>Q8|V4))$")


def cyclic_group(n: int) -> FiniteGroup:
    """Residues mod n; element 1 generates."""
    if n < 1:
        raise GroupValidationError(f"cyclic group needs n >= 1, got {n}")
    r = np.arange(n)
    table = np.add.outer(r, r) % n
    return FiniteGroup(table, label=f"C{n}", element_names=[str(i) for i in r], validate=False)


def _cycle_name(perm: Permutation) -> str:
    cycles = perm.cyclic_form
    if not cycles:
        return "e"
    return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cycles)


def from_permutation_group(pgroup: PermutationGroup, label: str) -> FiniteGroup:
    """
    Cayley table of a permutation group.

    Elements are the array forms in lexicographic order, so the identity comes
    first; the product is ``(a*b)[i] = a[b[i]]``.
    """
    forms = sorted(tuple(int(v) for v in p.array_form) for p in pgroup.generate())
    lookup = {form: i for i, form in enumerate(forms)}
    arr = np.array(forms, dtype=np.int64)
    n = len(forms)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        composed = arr[i][arr]  # composed[j] = a_i[a_j[.]]
        for j in range(n):
            table[i, j] = lookup[tuple(int(v) for v in composed[j])]
    names = [_cycle_name(Permutation(list(form))) for form in forms]
    return FiniteGroup(table, label=label, element_names=names, validate=False)


def quaternion_group() -> FiniteGroup:
    i = Permutation([[0, 1, 2, 3], [4, 5, 6, 7]])
    j = Permutation([[0, 4, 2, 6], [1, 7, 3, 5]])
    return from_permutation_group(PermutationGroup([i, j]), "Q8")


def _trivial(label: str) -> FiniteGroup:
    return FiniteGroup([[0]], label=label, element_names=["e"], validate=False)


def _build_token(token: str) -> FiniteGroup:
    match = _TOKEN.match(token)
    if match is None:
        raise GroupValidationError(f"unknown catalog name '{token}'")
    if match.group("special") == "Q8":
        return quaternion_group()
    if match.group("special") == "V4":
        c2 = cyclic_group(2)
        return direct_product(c2, c2, label="V4").group

    family, n = match.group("family"), int(match.group("n"))
    if n < 1:
        raise GroupValidationError(f"catalog name '{token}' needs n >= 1")
    if family == "C":
        if n > MAX_CATALOG_ORDER:
            raise GroupValidationError(f"C{n} exceeds the catalog order limit {MAX_CATALOG_ORDER}")
        return cyclic_group(n)
    if family == "D":
        if 2 * n > MAX_CATALOG_ORDER:
            raise GroupValidationError(f"D{n} exceeds the catalog order limit {MAX_CATALOG_ORDER}")
        return from_permutation_group(DihedralGroup(n), token)
    if n > 5:
        raise GroupValidationError(f"catalog name '{token}': symmetric and alternating groups need n <= 5")
    if family == "S":
        return _trivial(token) if n == 1 else from_permutation_group(SymmetricGroup(n), token)
    return _trivial(token) if n <= 2 else from_permutation_group(AlternatingGroup(n), token)


@lru_cache(maxsize=128)
def group_from_name(name: str) -> FiniteGroup:
    """Build a catalog group; products are parsed left to right."""
    tokens = name.strip().split("x")
    if not tokens or any(not t for t in tokens):
        raise GroupValidationError(f"malformed catalog name '{name}'")
    order = 1
    parts = []
    for token in tokens:
        part = _build_token(token)
        order *= part.order
        if order > MAX_CATALOG_ORDER:
            raise GroupValidationError(f"'{name}' exceeds the catalog order limit {MAX_CATALOG_ORDER}")
        parts.append(part)

    group = parts[0]
    for part in parts[1:]:
        group = direct_product(group, part).group
    if len(parts) > 1:
        group.label = name.strip()
    logger.debug(f"Built catalog group {group.label} of order {group.order}")
    return group


def build_group(source: Any, **validation: Any) -> FiniteGroup:
    """
    Resolve a group spec.

    Args:
        source: Catalog name, ``{"label", "order", "table"}`` object, or a raw table
        **validation: Passed to FiniteGroup for inline tables
            (``exhaustive_order``, ``random_triples``, ``seed``)

    Raises:
        GroupValidationError: If the spec is unknown or the table is not a group
    """
    if isinstance(source, FiniteGroup):
        return source
    if isinstance(source, str):
        return group_from_name(source)
    if isinstance(source, dict):
        if "table" not in source:
            raise GroupValidationError("group object needs a 'table' field")
        table = source["table"]
        label = str(source.get("label", "G"))
        if "order" in source and (not isinstance(table, list) or source["order"] != len(table)):
            raise GroupValidationError(f"{label}: declared order {source['order']} does not match table")
        return FiniteGroup(table, label=label, **validation)
    if isinstance(source, (list, np.ndarray)):
        return FiniteGroup(source, **validation)
    raise GroupValidationError(f"unsupported group spec {source!r}")


def catalog_entry(name: str) -> dict[str, Any]:
    """Summary row used by the ``catalog`` command."""
    group = group_from_name(name)
    aut, _ = automorphism_group(group)
    return {
        "name": name,
        "order": group.order,
        "abelian": group.is_abelian,
        "center_order": center(group).order,
        "aut_order": aut.order,
    }


def catalog_listing(names: tuple[str, ...] = CATALOG_LISTING) -> list[dict[str, Any]]:
    return [catalog_entry(name) for name in names]
