"""Test catalog names and group-spec parsing"""

import pytest

from src.groups import CATALOG_LISTING, build_group, group_from_name
from src.groups.catalog import catalog_entry
from src.utils.errors import GroupValidationError
from tests.conftest import Q8_MINUS_ONE


@pytest.mark.parametrize(
    "name, order",
    [
        ("C1", 1),
        ("C7", 7),
        ("S1", 1),
        ("S4", 24),
        ("A3", 3),
        ("A4", 12),
        ("A5", 60),
        ("D4", 8),
        ("D5", 10),
        ("Q8", 8),
        ("V4", 4),
        ("C2xS3", 12),
        ("C2xC2xC2", 8),
    ],
)
def test_catalog_orders(name, order):
    assert group_from_name(name).order == order


@pytest.mark.parametrize("name", ["S9", "A6", "X3", "", "C2x", "C0", "C2000", "q8"])
def test_bad_names(name):
    with pytest.raises(GroupValidationError):
        group_from_name(name)


def test_every_listed_name_builds():
    for name in CATALOG_LISTING:
        assert group_from_name(name).label == name


def test_quaternion_indices(q8):
    assert q8.element_order(Q8_MINUS_ONE) == 2
    assert sorted(q8.element_orders) == [1, 2, 4, 4, 4, 4, 4, 4]
    for x in q8.elements:
        if x not in (0, Q8_MINUS_ONE):
            assert q8.power(x, 2) == Q8_MINUS_ONE


def test_symmetric_group_names(s3):
    assert [s3.name_of(x) for x in s3.elements] == ["e", "(2 3)", "(1 2)", "(1 2 3)", "(1 3 2)", "(1 3)"]


class TestBuildGroup:
    """Group specs as names, objects and raw tables"""

    def test_name(self, s3):
        assert build_group("S3") is group_from_name("S3")
        assert build_group(s3) is s3

    def test_object(self):
        group = build_group({"label": "T", "order": 2, "table": [[0, 1], [1, 0]]})
        assert group.label == "T"
        assert group.order == 2

    def test_raw_table(self):
        assert build_group([[0, 1, 2], [1, 2, 0], [2, 0, 1]]) == group_from_name("C3")

    def test_validation_settings_are_forwarded(self):
        table = group_from_name("C2xC2xC2").table.tolist()
        group = build_group(table, exhaustive_order=2, random_triples=100, seed=7)
        assert group.order == 8

    @pytest.mark.parametrize(
        "spec, message",
        [
            ({"label": "T"}, "table"),
            ({"label": "T", "order": 3, "table": [[0, 1], [1, 0]]}, "declared order"),
            (42, "unsupported"),
        ],
    )
    def test_bad_specs(self, spec, message):
        with pytest.raises(GroupValidationError, match=message):
            build_group(spec)


class TestCatalogEntry:
    @pytest.mark.parametrize(
        "name, center_order, aut_order",
        [("C2", 2, 1), ("S3", 1, 6), ("Q8", 2, 24), ("V4", 4, 6), ("D4", 2, 8)],
    )
    def test_summary(self, name, center_order, aut_order):
        entry = catalog_entry(name)
        assert entry["center_order"] == center_order
        assert entry["aut_order"] == aut_order
        assert entry["abelian"] == (center_order == entry["order"])
