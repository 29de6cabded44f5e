"""Test Cayley-table validation and element arithmetic"""

import numpy as np
import pytest

from src.groups import FiniteGroup, Subgroup, build_group
from src.utils.errors import GroupValidationError
from tests.conftest import A3, TRANSPOSITION_12

# Latin square with identity and self-inverse elements; not a group
LOOP_OF_ORDER_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


class TestValidation:
    """Construction either yields a group or fails"""

    def test_trivial_group(self):
        """cyclic(1) has order 1"""
        group = build_group("C1")
        assert group.order == 1
        assert group.is_abelian

    def test_two_by_two_table_is_c2(self):
        """A 2x2 table with table[1][1] = 0 is the group of order 2"""
        group = FiniteGroup([[0, 1], [1, 0]], label="T")
        assert group.order == 2
        assert group.mul(1, 1) == 0
        assert group.inv(1) == 1

    def test_identity_relabelled_to_zero(self):
        """An identity stored at index 1 is swapped to index 0"""
        group = FiniteGroup([[1, 0], [0, 1]], label="T", element_names=["a", "e"])
        assert group.table.tolist() == [[0, 1], [1, 0]]
        assert group.element_names == ("e", "a")

    def test_non_associative_table_rejected(self):
        """A loop that is not a group fails the associativity check"""
        with pytest.raises(GroupValidationError, match="not associative"):
            FiniteGroup(LOOP_OF_ORDER_5)

    def test_non_associative_table_rejected_by_random_triples(self):
        """The randomized check finds the failure as well"""
        with pytest.raises(GroupValidationError, match="not associative"):
            FiniteGroup(LOOP_OF_ORDER_5, exhaustive_order=1, random_triples=2000)

    def test_missing_identity(self):
        with pytest.raises(GroupValidationError, match="identity"):
            FiniteGroup([[1, 1], [1, 1]])

    def test_not_latin(self):
        with pytest.raises(GroupValidationError, match="Latin"):
            FiniteGroup([[0, 1], [1, 1]])

    def test_order_zero_and_bad_shapes(self):
        with pytest.raises(GroupValidationError):
            FiniteGroup([])
        with pytest.raises(GroupValidationError):
            FiniteGroup([[0, 1, 2], [1, 2, 0]])
        with pytest.raises(GroupValidationError, match="outside"):
            FiniteGroup([[0, 2], [2, 0]])

    def test_randomized_check_accepts_groups(self, s4):
        group = FiniteGroup(s4.table, label="S4", exhaustive_order=4, random_triples=500)
        assert group == s4

    def test_tables_are_read_only(self, s3):
        with pytest.raises(ValueError):
            s3.table[0, 0] = 1


class TestArithmetic:
    """Products, inverses, powers and orders"""

    def test_symmetric_group_of_degree_three(self, s3):
        assert s3.order == 6
        assert not s3.is_abelian
        assert list(s3.element_orders) == [1, 2, 2, 3, 3, 2]

    def test_power_and_inverse(self, s3):
        assert s3.power(3, 2) == 4
        assert s3.power(3, 3) == 0
        assert s3.power(3, -1) == s3.inv(3) == 4

    def test_conjugate(self, s3):
        # conjugating (1 2) by (2 3) gives (1 3)
        assert s3.conjugate(TRANSPOSITION_12, 1) == 5
        assert s3.commutes(0, TRANSPOSITION_12)
        assert not s3.commutes(1, TRANSPOSITION_12)

    def test_names_and_serialization(self, s3):
        assert s3.name_of(0) == "e"
        assert s3.name_of(TRANSPOSITION_12) == "(1 2)"
        data = s3.to_dict()
        assert data["order"] == 6
        assert build_group(data) == s3

    def test_check_element(self, s3):
        assert s3.check_element(np.int64(5)) == 5
        for bad in (6, -1, True, "1"):
            with pytest.raises(GroupValidationError):
                s3.check_element(bad)


class TestSubgroup:
    """Subgroups as sorted elements plus bitsets"""

    def test_valid_subgroup(self, s3):
        sub = Subgroup(s3, [TRANSPOSITION_12, 0])
        assert sub.elements == (0, TRANSPOSITION_12)
        assert sub.order == 2
        assert sub.index() == 3
        assert TRANSPOSITION_12 in sub
        assert 3 not in sub

    def test_rejects_non_subgroups(self, s3):
        with pytest.raises(GroupValidationError, match="closed"):
            Subgroup(s3, [0, 3])
        with pytest.raises(GroupValidationError, match="identity"):
            Subgroup(s3, [TRANSPOSITION_12])

    def test_normality(self, s3):
        assert Subgroup(s3, A3).is_normal()
        assert not Subgroup(s3, [0, TRANSPOSITION_12]).is_normal()

    def test_intersection_and_containment(self, s3):
        a3 = Subgroup(s3, A3)
        swap = Subgroup(s3, [0, TRANSPOSITION_12])
        assert a3.intersection(swap).is_trivial()
        assert Subgroup(s3, [0]).is_subgroup_of(a3)
        assert not swap.is_subgroup_of(a3)
        assert Subgroup(s3, s3.elements).is_whole()
