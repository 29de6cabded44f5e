"""Test specialization subgroups, the crux containments and point partitions"""

import pytest

from src.groups import Homomorphism, enumerate_homs, group_from_name
from src.twisting import (
    PointClass,
    TwistModel,
    central_homs,
    crux_check,
    is_g_galois_specialization,
    model_independence_check,
    point_partition,
    pointwise_product,
    specialization_join,
    specialization_report,
    specialization_subgroup,
)
from src.utils.errors import GroupValidationError
from tests.conftest import Q8_MINUS_ONE, TRANSPOSITION_12, TRANSPOSITION_13


def all_points(G, Q):
    return [PointClass(h) for h in enumerate_homs(Q, G)]


class TestSpecializationSubgroup:
    def test_kernels(self, s3, c2):
        assert specialization_subgroup(PointClass.from_images(s3, c2, [0, TRANSPOSITION_12])).is_trivial()
        assert specialization_subgroup(PointClass.from_images(s3, c2, [0, 0])).is_whole()

    def test_g_galois_specialization(self, s3, c2):
        assert is_g_galois_specialization(PointClass(Homomorphism.identity(s3)))
        assert not is_g_galois_specialization(PointClass.from_images(s3, c2, [0, TRANSPOSITION_12]))

    def test_central_homs(self, s3, q8, c2):
        assert [h.images for h in central_homs(c2, s3)] == [(0, 0)]
        assert [h.images for h in central_homs(c2, q8)] == [(0, 0), (0, Q8_MINUS_ONE)]

    def test_pointwise_product(self, q8, c2):
        phi = Homomorphism(c2, q8, [0, Q8_MINUS_ONE])
        assert pointwise_product(phi, phi).is_trivial()


class TestCrux:
    """Containments for a lift α of φ"""

    def test_transposition_lift(self, s3, c2):
        model = TwistModel.from_images(s3, c2, [0, TRANSPOSITION_12])
        report = crux_check(model, PointClass.from_images(s3, c2, [0, TRANSPOSITION_13]))
        assert report.passed
        assert report.kernel.is_trivial()
        assert report.specialization_join.is_trivial()

    def test_central_lift_has_whole_join(self, q8, c2):
        model = TwistModel.from_images(q8, c2, [0, Q8_MINUS_ONE])
        report = crux_check(model, PointClass(model.alpha))
        assert report.passed
        assert report.specialization_join.is_whole()
        assert report.to_dict()["minimal_galois_subgroup"] == [0, 1]

    def test_every_lift_passes(self, q8, s4):
        for G, Q in ((s4, group_from_name("C2")), (q8, group_from_name("C4")), (s4, group_from_name("V4"))):
            for point in all_points(G, Q):
                assert crux_check(TwistModel(G, Q, point.phi), point).passed

    def test_requires_a_lift(self, s3, c2):
        model = TwistModel.from_images(s3, c2, [0, TRANSPOSITION_12])
        with pytest.raises(GroupValidationError, match="not a lift"):
            crux_check(model, PointClass.from_images(s3, c2, [0, 0]))

    def test_join_of_q8_over_c4(self, q8):
        c4 = group_from_name("C4")
        # every translate of an order-4 point stays injective
        assert specialization_join(PointClass.from_images(q8, c4, [0, 1, 2, 3])).is_trivial()
        # the translate by the sign character kills everything
        assert specialization_join(PointClass.from_images(q8, c4, [0, Q8_MINUS_ONE, 0, Q8_MINUS_ONE])).is_whole()


class TestPartition:
    """Points grouped by conjugacy class of φ"""

    def test_partition(self, s3, c2):
        points = [PointClass.from_images(s3, c2, images) for images in ([0, 0], [0, 2], [0, 5])]
        classes = point_partition(points)
        assert [len(c) for c in classes] == [1, 2]
        assert classes[0][0].canonical == (0, 0)

    def test_mixed_points(self, s3, c2):
        points = [PointClass.from_images(s3, c2, [0, 0]), PointClass.from_images(c2, c2, [0, 1])]
        with pytest.raises(GroupValidationError, match="different"):
            point_partition(points)


class TestSpecializationReport:
    """Fiber counts per class of points"""

    def test_untwisted(self, s3, c2):
        model = TwistModel.from_images(s3, c2, [0, 0])
        report = specialization_report(model, all_points(s3, c2))
        assert report.d == 6
        assert report.conjugate_models == 1
        assert [(c.canonical, c.points, c.count) for c in report.classes] == [((0, 0), 1, 6), ((0, 1), 3, 0)]

    def test_transposition(self, s3, c2):
        model = TwistModel.from_images(s3, c2, [0, TRANSPOSITION_12])
        data = specialization_report(model, all_points(s3, c2)).to_dict()
        assert data["d"] == 2
        assert data["conjugate_models"] == 3
        assert data["center_order"] == 1
        assert data["classes"] == [
            {"phi": [0, 0], "points": 1, "count": 0},
            {"phi": [0, 1], "points": 3, "count": 2},
        ]

    def test_abelian_group(self, c4, c2):
        model = TwistModel.from_images(c4, c2, [0, 2])
        report = specialization_report(model, all_points(c4, c2))
        assert report.d == 4
        assert report.conjugate_models == 1
        assert report.center_order == 4

    def test_no_points(self, s3, c2):
        report = specialization_report(TwistModel.from_images(s3, c2, [0, 0]), [])
        assert report.classes == []
        assert report.d is None

    def test_no_lift_among_points(self, s3, c2):
        model = TwistModel.from_images(s3, c2, [0, TRANSPOSITION_12])
        report = specialization_report(model, [PointClass.from_images(s3, c2, [0, 0])])
        assert report.d is None
        assert report.conjugate_models is None


class TestModelIndependence:
    """Translating every φ by a central α₀ keeps the partition"""

    def test_trivial_translation(self, s3, c2):
        assert model_independence_check(Homomorphism.trivial(c2, s3), all_points(s3, c2))

    def test_q8_central_translation(self, q8, c2):
        alpha0 = Homomorphism(c2, q8, [0, Q8_MINUS_ONE])
        assert model_independence_check(alpha0, all_points(q8, c2))

    def test_q8_over_c4(self, q8):
        c4 = group_from_name("C4")
        alpha0 = Homomorphism(c4, q8, [0, Q8_MINUS_ONE, 0, Q8_MINUS_ONE])
        assert model_independence_check(alpha0, all_points(q8, c4))

    def test_abelian(self, c4, c2):
        assert model_independence_check(Homomorphism(c2, c4, [0, 2]), all_points(c4, c2))

    def test_non_central_rejected(self, s3, c2):
        with pytest.raises(GroupValidationError, match="central"):
            model_independence_check(Homomorphism(c2, s3, [0, TRANSPOSITION_12]), all_points(s3, c2))
