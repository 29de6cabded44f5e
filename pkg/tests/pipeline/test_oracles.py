"""Test the brute-force reference computations"""

import pytest

from src.groups import Subgroup
from src.pipeline.oracles import (
    brute_force_center,
    brute_force_centralizer,
    brute_force_complements,
    brute_force_conjugates,
    brute_force_homs,
    largest_normal_subgroup_inside,
)
from src.utils.errors import BudgetExceededError
from tests.conftest import A3, TRANSPOSITION_12


def test_homs(c2, s3):
    assert brute_force_homs(c2, s3, 100) == [(0, 0), (0, 1), (0, 2), (0, 5)]


def test_hom_limit(c2, s3):
    with pytest.raises(BudgetExceededError) as exc:
        brute_force_homs(c2, s3, 10)
    assert exc.value.bound == 10


def test_centers(s3, q8, c4):
    assert brute_force_center(s3) == [0]
    assert brute_force_center(q8) == [0, 2]
    assert brute_force_center(c4) == [0, 1, 2, 3]
    assert brute_force_centralizer(s3, [3]) == list(A3)


def test_conjugates(s3):
    conjugates = brute_force_conjugates(s3, Subgroup(s3, [0, TRANSPOSITION_12]))
    assert len(conjugates) == 6
    assert sorted({tuple(c) for c in conjugates}) == [(0, 1), (0, 2), (0, 5)]


def test_largest_normal_subgroup(s3):
    assert largest_normal_subgroup_inside(s3, Subgroup(s3, [0, TRANSPOSITION_12])).is_trivial()
    assert largest_normal_subgroup_inside(s3, Subgroup(s3, A3)).elements == A3


def test_complements(s3):
    complements = brute_force_complements(s3, Subgroup(s3, A3), 2)
    assert sorted(complements) == [[0, 1], [0, 2], [0, 5]]
