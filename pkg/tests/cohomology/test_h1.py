"""Test 1-cocycles and nonabelian H¹"""

import pytest

from src.cohomology import OneCocycle, enumerate_cocycles, h1_classes
from src.groups import GroupAction, enumerate_homs
from src.twisting import classify_models
from src.utils.config import SearchBudget
from src.utils.errors import BudgetExceededError, GroupValidationError


class TestCocycles:
    """z(ab) = z(a)·θ_a(z(b))"""

    def test_trivial_action_gives_homomorphisms(self, c2, s3):
        cocycles = enumerate_cocycles(GroupAction.trivial(c2, s3))
        assert sorted(z.values for z in cocycles) == sorted(h.images for h in enumerate_homs(c2, s3))

    def test_inversion_on_c3(self, inversion_action):
        cocycles = enumerate_cocycles(inversion_action)
        assert [z.values for z in cocycles] == [(0, 0), (0, 1), (0, 2)]
        assert all(z.is_cocycle() for z in cocycles)

    def test_is_cocycle(self, c2, c3, inversion_action):
        assert OneCocycle(inversion_action, (0, 1)).is_cocycle()
        assert not OneCocycle(GroupAction.trivial(c2, c3), (0, 1)).is_cocycle()
        assert not OneCocycle(inversion_action, (1, 1)).is_cocycle()

    def test_coboundary_shift(self, inversion_action):
        # g⁻¹·z(q)·θ_q(g) with z = 0 and g = 1 gives (0, -2) = (0, 1)
        assert OneCocycle(inversion_action, (0, 0)).coboundary_shift(1) == (0, 1)

    def test_budget(self, c2, s3):
        with pytest.raises(BudgetExceededError):
            enumerate_cocycles(GroupAction.trivial(c2, s3), SearchBudget(max_hom_search=5))


class TestH1:
    """Cocycles up to the twisted conjugation"""

    def test_c2_in_s3(self, c2, s3):
        classes = h1_classes(c2, s3)
        assert len(classes) == 2
        assert sum(c.size for c in classes) == 4
        assert [c.canonical for c in classes] == [(0, 0), (0, 1)]

    def test_trivial_coefficients(self, c2, c1):
        classes = h1_classes(c2, c1)
        assert len(classes) == 1
        assert classes[0].size == 1

    def test_inversion_on_c3(self, c2, c3, inversion_action):
        classes = h1_classes(c2, c3, inversion_action)
        assert len(classes) == 1
        assert classes[0].size == 3

    def test_trivial_action_matches_model_classes(self, s3, q8, c2, c4):
        for G, Q in ((s3, c2), (q8, c2), (q8, c4), (c4, c2)):
            assert len(h1_classes(Q, G)) == len(classify_models(G, Q))

    def test_action_must_fit(self, c2, s3, inversion_action):
        with pytest.raises(GroupValidationError, match="action must be"):
            h1_classes(c2, s3, inversion_action)
