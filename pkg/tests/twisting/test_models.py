"""Test twisted models, fiber counts and the Galois criterion for twists"""

import pytest

from src.groups import Homomorphism, Subgroup, group_from_name
from src.twisting import (
    PointClass,
    TwistModel,
    classify_models,
    count_rational_points,
    fixed_points,
    galois_conjugates,
    graph_subgroup,
    identity_stabilizer,
    is_twist_galois,
    minimal_galois_subgroup,
    model_section,
    restrict_model,
    twist_action,
)
from src.utils.errors import GroupValidationError
from tests.conftest import Q8_MINUS_ONE, TRANSPOSITION_12, TRANSPOSITION_13


@pytest.fixture
def trivial_model(s3, c2):
    return TwistModel.from_images(s3, c2, [0, 0])


@pytest.fixture
def transposition_model(s3, c2):
    return TwistModel.from_images(s3, c2, [0, TRANSPOSITION_12])


class TestTwistAction:
    """G×Q acting on G by h -> g·h·α(q)⁻¹"""

    def test_untwisted_is_left_translation(self, trivial_model, s3):
        action = twist_action(trivial_model)
        assert action.degree == 6
        assert action.is_transitive()
        for g in s3.elements:
            assert list(action.permutations[2 * g]) == [s3.mul(g, h) for h in s3.elements]

    def test_twisted_row(self, transposition_model, s3):
        action = twist_action(transposition_model)
        assert action.is_transitive()
        row = action.permutations[1]
        assert all(row[h] != h for h in s3.elements)
        assert list(row[row]) == list(s3.elements)

    def test_stabilizer_and_graph(self, transposition_model):
        stabilizer = identity_stabilizer(twist_action(transposition_model))
        graph = graph_subgroup(transposition_model)
        assert stabilizer.order == 2
        assert graph.elements == (0, 5)
        assert model_section(transposition_model).images == (0, 5)


class TestPointCounts:
    """Rational points over a point: d for lifts, 0 otherwise"""

    def test_untwisted_over_trivial_point(self, trivial_model, s3, c2):
        assert count_rational_points(trivial_model, PointClass.from_images(s3, c2, [0, 0])) == 6

    def test_lift(self, transposition_model, s3, c2):
        assert count_rational_points(transposition_model, PointClass.from_images(s3, c2, [0, TRANSPOSITION_12])) == 2
        assert count_rational_points(transposition_model, PointClass.from_images(s3, c2, [0, TRANSPOSITION_13])) == 2

    def test_not_a_lift(self, transposition_model, s3, c2):
        assert count_rational_points(transposition_model, PointClass.from_images(s3, c2, [0, 0])) == 0

    def test_direct_scan(self, transposition_model, s3, c2):
        assert fixed_points(transposition_model, Homomorphism(c2, s3, [0, 1])) == 2

    def test_mismatched_groups(self, transposition_model, c2):
        v4 = group_from_name("V4")
        with pytest.raises(GroupValidationError, match="different"):
            count_rational_points(transposition_model, PointClass.from_images(v4, c2, [0, 1]))

    def test_point_canonical_form(self, s3, c2):
        point = PointClass.from_images(s3, c2, [0, TRANSPOSITION_13])
        assert point.canonical == (0, 1)
        assert point == PointClass.from_images(s3, c2, [0, TRANSPOSITION_12])


class TestGaloisTwists:
    """A twist is Galois iff img α is central"""

    def test_trivial_twist(self, trivial_model):
        assert is_twist_galois(trivial_model)

    def test_transposition_twist(self, transposition_model):
        assert not is_twist_galois(transposition_model)

    def test_central_twist_of_q8(self, q8, c2):
        assert is_twist_galois(TwistModel.from_images(q8, c2, [0, Q8_MINUS_ONE]))
        assert not is_twist_galois(TwistModel.from_images(q8, group_from_name("C4"), [0, 1, 2, 3]))

    def test_minimal_galois_subgroup(self, transposition_model, trivial_model):
        assert minimal_galois_subgroup(transposition_model, verify=True).is_trivial()
        assert minimal_galois_subgroup(trivial_model, verify=True).is_whole()

    def test_minimal_galois_subgroup_of_c4_twist(self, s3, c4):
        model = TwistModel.from_images(s3, c4, [0, TRANSPOSITION_12, 0, TRANSPOSITION_12])
        assert minimal_galois_subgroup(model, verify=True).elements == (0, 2)

    def test_restriction(self, s3, c4):
        model = TwistModel.from_images(s3, c4, [0, TRANSPOSITION_12, 0, TRANSPOSITION_12])
        restricted = restrict_model(model, Subgroup(c4, [0, 2]))
        assert restricted.Q.order == 2
        assert restricted.alpha.is_trivial()
        assert is_twist_galois(restricted)

    def test_restriction_needs_subgroup_of_q(self, transposition_model, c4):
        with pytest.raises(GroupValidationError, match="subgroup"):
            restrict_model(transposition_model, Subgroup(c4, [0, 2]))

    def test_model_needs_matching_groups(self, s3, c2):
        with pytest.raises(GroupValidationError):
            TwistModel(s3, c2, Homomorphism.identity(c2))


class TestClassification:
    """Models up to isomorphism are Hom(Q, G) up to conjugacy"""

    def test_s3_over_c2(self, s3, c2):
        classes = classify_models(s3, c2)
        assert [c.to_dict() for c in classes] == [
            {"alpha": [0, 0], "size": 1, "galois": True, "d": 6},
            {"alpha": [0, 1], "size": 3, "galois": False, "d": 2},
        ]

    def test_trivial_base(self, s3, c1):
        classes = classify_models(s3, c1)
        assert len(classes) == 1
        assert classes[0].galois

    def test_abelian(self, c2):
        classes = classify_models(c2, c2)
        assert [c.size for c in classes] == [1, 1]
        assert all(c.galois for c in classes)

    def test_class_sizes(self, q8, c2, s4):
        for G, Q in ((q8, c2), (q8, group_from_name("C4")), (s4, c2)):
            for c in classify_models(G, Q):
                assert c.size * c.centralizer_order == G.order

    def test_galois_conjugates(self, transposition_model, trivial_model):
        conjugates = galois_conjugates(transposition_model)
        assert [m.alpha.images for m in conjugates] == [(0, 1), (0, 2), (0, 5)]
        assert len(galois_conjugates(trivial_model)) == 1
