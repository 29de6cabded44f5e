"""Test invariant-factor decompositions of abelian groups"""

import pytest

from src.cohomology import cyclic_decomposition
from src.groups import group_from_name
from src.utils.errors import GroupValidationError


@pytest.mark.parametrize(
    "name, factors",
    [
        ("C1", ()),
        ("C2", (2,)),
        ("C6", (6,)),
        ("V4", (2, 2)),
        ("C2xC4", (2, 4)),
        ("C2xC3", (6,)),
        ("C2xC2xC2", (2, 2, 2)),
        ("C4xC6", (2, 12)),
    ],
)
def test_invariant_factors(name, factors):
    assert cyclic_decomposition(group_from_name(name)).factors == factors


def test_coordinates_are_a_bijection():
    group = group_from_name("C2xC4")
    decomposition = cyclic_decomposition(group)
    for a in group.elements:
        assert decomposition.element(decomposition.coordinates[a]) == a


def test_coordinates_are_additive():
    group = group_from_name("C4xC6")
    decomposition = cyclic_decomposition(group)
    coords = decomposition.coordinates
    for a in group.elements:
        for b in group.elements:
            assert decomposition.element(coords[a] + coords[b]) == group.mul(a, b)


def test_generators_have_factor_orders():
    group = group_from_name("C2xC4")
    decomposition = cyclic_decomposition(group)
    assert [group.element_order(g) for g in decomposition.generators] == [2, 4]


def test_action_matrices(inversion_action):
    decomposition = cyclic_decomposition(inversion_action.target)
    identity, inversion = decomposition.action_matrices(inversion_action)
    assert identity.tolist() == [[1]]
    assert int(inversion[0, 0]) % 3 == 2


def test_non_abelian_rejected(s3):
    with pytest.raises(GroupValidationError, match="not abelian"):
        cyclic_decomposition(s3)
