"""Test extensions, section enumeration, complements and the Galois criterion"""

import pytest

from src.extensions import (
    GroupExtension,
    Section,
    complements_of_kernel,
    direct_product_extension,
    enumerate_sections,
    extension_from_normal_subgroup,
    is_model_galois,
    split_extension,
)
from src.groups import Homomorphism, Subgroup
from src.pipeline.oracles import brute_force_complements
from src.utils.config import SearchBudget
from src.utils.errors import BudgetExceededError, GroupValidationError
from tests.conftest import A3, TRANSPOSITION_12, TRANSPOSITION_13


@pytest.fixture
def s3_over_a3(s3):
    return extension_from_normal_subgroup(s3, Subgroup(s3, A3))


class TestGroupExtension:
    """Exactness checks on construction"""

    def test_split_extension_shape(self, c3, c2, inversion_action):
        ext = split_extension(c3, c2, inversion_action)
        assert ext.total.order == 6
        assert ext.kernel_image.elements == (0, 2, 4)
        assert ext.canonical_section is not None
        assert ext.canonical_section.images == (0, 1)
        assert not ext.is_direct_product()

    def test_direct_product_extension(self, s3, c2):
        ext = direct_product_extension(s3, c2)
        assert ext.is_direct_product()
        assert ext.fiber(1) == [1, 3, 5, 7, 9, 11]

    def test_from_normal_subgroup(self, s3_over_a3):
        assert s3_over_a3.kernel.order == 3
        assert s3_over_a3.quotient.order == 2
        assert s3_over_a3.canonical_section is None
        assert s3_over_a3.fiber(1) == [1, TRANSPOSITION_12, TRANSPOSITION_13]

    def test_rejects_non_injective_kernel_map(self, c2):
        with pytest.raises(GroupValidationError, match="injective"):
            GroupExtension(c2, c2, c2, Homomorphism.trivial(c2, c2), Homomorphism.identity(c2))

    def test_rejects_inexact_sequence(self, c2, v4):
        iota = Homomorphism(c2, v4, [0, 1])
        pi = Homomorphism(v4, c2, [0, 1, 0, 1])
        with pytest.raises(GroupValidationError, match="not exact"):
            GroupExtension(c2, v4, c2, iota, pi)

    def test_rejects_mismatched_maps(self, c2, c3, v4):
        with pytest.raises(GroupValidationError, match="iota"):
            GroupExtension(c3, v4, c2, Homomorphism(c2, v4, [0, 1]), Homomorphism(v4, c2, [0, 0, 1, 1]))


class TestSections:
    """Section enumeration and validation"""

    def test_c2_times_c2(self, c2):
        ext = direct_product_extension(c2, c2)
        assert [s.images for s in enumerate_sections(ext)] == [(0, 1), (0, 3)]

    def test_trivial_quotient(self, s3, c1):
        sections = enumerate_sections(direct_product_extension(s3, c1))
        assert [s.images for s in sections] == [(0,)]

    def test_s3_over_a3(self, s3_over_a3):
        sections = enumerate_sections(s3_over_a3)
        assert [s.images for s in sections] == [(0, 1), (0, TRANSPOSITION_12), (0, TRANSPOSITION_13)]
        complements = complements_of_kernel(s3_over_a3)
        assert [c.elements for c in complements] == [(0, 1), (0, 2), (0, 5)]
        assert sorted(s.image.elements for s in sections) == [c.elements for c in complements]

    def test_non_split(self, c4):
        ext = extension_from_normal_subgroup(c4, Subgroup(c4, [0, 2]))
        assert enumerate_sections(ext) == []
        assert complements_of_kernel(ext) == []

    def test_complements_match_subgroup_scan(self, s3, c2):
        for ext in (direct_product_extension(s3, c2), direct_product_extension(c2, c2)):
            found = [list(c.elements) for c in complements_of_kernel(ext)]
            assert found == sorted(brute_force_complements(ext.total, ext.kernel_image, ext.quotient.order))

    def test_budget(self, s3_over_a3):
        with pytest.raises(BudgetExceededError):
            enumerate_sections(s3_over_a3, SearchBudget(max_hom_search=2))

    def test_invalid_section(self, c2, s3):
        ext = direct_product_extension(c2, c2)
        with pytest.raises(GroupValidationError, match="identity"):
            ext.section_from_images([0, 2])
        with pytest.raises(GroupValidationError, match="quotient group"):
            Section(ext, Homomorphism.trivial(s3, ext.total))


class TestGaloisCriterion:
    """img(s) centralizing the kernel agrees with img(s) being normal"""

    def test_trivial_graph_is_galois(self, s3, c2):
        ext = direct_product_extension(s3, c2)
        assert is_model_galois(ext, ext.canonical_section)

    def test_twisted_graph_is_not_galois(self, s3, c2):
        ext = direct_product_extension(s3, c2)
        assert not is_model_galois(ext, ext.section_from_images([0, 5]))

    def test_abelian_kernel(self, c2):
        ext = direct_product_extension(c2, c2)
        assert all(is_model_galois(ext, s) for s in enumerate_sections(ext))

    def test_s3_over_a3_sections(self, s3_over_a3):
        assert not any(is_model_galois(s3_over_a3, s) for s in enumerate_sections(s3_over_a3))

    def test_foreign_section(self, c2, s3):
        ext = direct_product_extension(s3, c2)
        other = direct_product_extension(c2, c2)
        with pytest.raises(GroupValidationError, match="does not belong"):
            is_model_galois(ext, other.canonical_section)
