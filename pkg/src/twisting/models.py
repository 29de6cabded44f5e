"""Twisted models of a G-Galois cover at the level of groups.

A model is a homomorphism α: Q -> G. Its cover is G with ``(g, q)`` acting by
``h -> g·h·α(q)⁻¹``, and a point is recorded by its specialization
homomorphism φ: Q -> G up to conjugation in G.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np

from ..extensions import GroupExtension, Section, direct_product_extension
from ..groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    all_subgroups,
    canonical_conjugate,
    center,
    centralizer,
    conjugacy_partition_homs,
    enumerate_homs,
    subgroup_as_group,
)
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import GroupValidationError, TheoremViolationError

logger = logging.getLogger(__name__)


class TwistModel:
    """The twist of the standard G-Galois model by α: Q -> G."""

    def __init__(self, G: FiniteGroup, Q: FiniteGroup, alpha: Homomorphism):
        if alpha.domain != Q or alpha.codomain != G:
            raise GroupValidationError(f"alpha must be a homomorphism {Q.label} -> {G.label}")
        self.G = G
        self.Q = Q
        self.alpha = alpha

    @classmethod
    def from_images(cls, G: FiniteGroup, Q: FiniteGroup, images: Sequence[int]) -> TwistModel:
        return cls(G, Q, Homomorphism(Q, G, images))

    @cached_property
    def extension(self) -> GroupExtension:
        """G×Q -> Q, with ``(g, q)`` at index ``g*|Q| + q``."""
        return direct_product_extension(self.G, self.Q)

    @cached_property
    def centralizer_order(self) -> int:
        """d = |C_G(img α)|."""
        return centralizer(self.G, self.alpha.image()).order

    def same_groups(self, G: FiniteGroup, Q: FiniteGroup) -> bool:
        return self.G == G and self.Q == Q

    def to_dict(self) -> dict[str, Any]:
        return {"G": self.G.label, "Q": self.Q.label, "alpha": list(self.alpha.images)}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwistModel):
            return NotImplemented
        return self.alpha == other.alpha

    def __hash__(self) -> int:
        return hash(self.alpha)

    def __repr__(self) -> str:
        return f"TwistModel({self.Q.label} -> {self.G.label}: {list(self.alpha.images)})"


class PointClass:
    """A point, recorded by its specialization homomorphism up to G-conjugacy."""

    def __init__(self, phi: Homomorphism):
        self.phi = phi
        self.canonical: tuple[int, ...] = canonical_conjugate(phi)

    @classmethod
    def from_images(cls, G: FiniteGroup, Q: FiniteGroup, images: Sequence[int]) -> PointClass:
        return cls(Homomorphism(Q, G, images))

    @property
    def G(self) -> FiniteGroup:
        return self.phi.codomain

    @property
    def Q(self) -> FiniteGroup:
        return self.phi.domain

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointClass):
            return NotImplemented
        return self.canonical == other.canonical and self.G == other.G and self.Q == other.Q

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"PointClass({list(self.canonical)})"


@dataclass(frozen=True)
class TwistAction:
    """Permutation of G for each ``(g, q)`` at row ``g*|Q| + q``."""

    model: TwistModel
    permutations: np.ndarray

    @property
    def degree(self) -> int:
        return int(self.permutations.shape[1])

    def is_transitive(self) -> bool:
        reached = np.zeros(self.degree, dtype=bool)
        reached[self.permutations[:, 0]] = True
        return bool(reached.all())


@dataclass(frozen=True)
class ModelClass:
    """One isomorphism class of models: a G-conjugacy class of α."""

    canonical: tuple[int, ...]
    size: int
    galois: bool
    centralizer_order: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": list(self.canonical),
            "size": self.size,
            "galois": self.galois,
            "d": self.centralizer_order,
        }


def twist_action(model: TwistModel) -> TwistAction:
    """
    Build the action table and check that it is a homomorphism G×Q -> Sym(G).

    Raises:
        TheoremViolationError: If the table is not multiplicative
    """
    G, Q = model.G, model.Q
    nq = Q.order
    idx = np.arange(G.order * nq)
    gi, qi = idx // nq, idx % nq
    right = G.inverses[model.alpha.array[qi]]
    # perms[x, h] = g_x · h · α(q_x)⁻¹
    perms = G.table[G.table[gi[:, None], np.arange(G.order)[None, :]], right[:, None]]

    product = model.extension.total.table
    composed = perms[np.arange(len(idx))[:, None, None], perms[None, :, :]]
    if not np.array_equal(perms[product], composed):
        raise TheoremViolationError(f"twist action of {model!r} is not multiplicative")
    perms.setflags(write=False)
    return TwistAction(model, perms)


def fixed_points(model: TwistModel, phi: Homomorphism) -> int:
    """|{h ∈ G : φ(q)·h·α(q)⁻¹ = h for all q}| by direct scan."""
    G = model.G
    h = np.arange(G.order)
    fixed = np.ones(G.order, dtype=bool)
    for q in model.Q.elements:
        moved = G.table[G.table[phi(q), h], G.inverses[model.alpha(q)]]
        fixed &= moved == h
    return int(fixed.sum())


def count_rational_points(model: TwistModel, point: PointClass) -> int:
    """
    Rational points of the twisted fiber over a point.

    The direct count is compared against |C_G(img α)| for lifts and 0 otherwise.

    Raises:
        GroupValidationError: If model and point live over different groups
        TheoremViolationError: If the direct count disagrees with the formula
    """
    if not model.same_groups(point.G, point.Q):
        raise GroupValidationError("model and point are over different (G, Q)")
    direct = fixed_points(model, point.phi)
    is_lift = canonical_conjugate(model.alpha) == point.canonical
    expected = model.centralizer_order if is_lift else 0
    if direct != expected:
        raise TheoremViolationError(
            f"fixed-point count {direct} differs from {expected} for {model!r} over {point!r}"
        )
    return direct


def identity_stabilizer(action: TwistAction) -> Subgroup:
    """Stabilizer of the identity of G, as a subgroup of G×Q."""
    rows = np.flatnonzero(action.permutations[:, 0] == 0)
    return Subgroup(action.model.extension.total, rows, validate=False)


def graph_subgroup(model: TwistModel) -> Subgroup:
    """{(α(q), q)} inside G×Q."""
    nq = model.Q.order
    return Subgroup(
        model.extension.total,
        [model.alpha(q) * nq + q for q in model.Q.elements],
        validate=False,
    )


def model_section(model: TwistModel) -> Section:
    """The section q -> (α(q), q) of G×Q -> Q."""
    nq = model.Q.order
    return model.extension.section_from_images([model.alpha(q) * nq + q for q in model.Q.elements])


def is_twist_galois(model: TwistModel) -> bool:
    """
    True iff img(α) ⊆ Z(G).

    Normality of the graph and of the identity stabilizer are computed
    independently and must agree.

    Raises:
        TheoremViolationError: If the three criteria disagree
    """
    central = model.alpha.image().is_subgroup_of(center(model.G))
    graph_normal = graph_subgroup(model).is_normal()
    stabilizer_normal = identity_stabilizer(twist_action(model)).is_normal()
    if not central == graph_normal == stabilizer_normal:
        raise TheoremViolationError(
            f"Galois criteria disagree for {model!r}: central={central}, "
            f"graph_normal={graph_normal}, stabilizer_normal={stabilizer_normal}"
        )
    return central


def restrict_model(model: TwistModel, sub: Subgroup) -> TwistModel:
    """
    The model over a subgroup H of Q: α restricted to H.

    Raises:
        GroupValidationError: If ``sub`` is not a subgroup of Q
    """
    if sub.parent != model.Q:
        raise GroupValidationError(f"restriction needs a subgroup of {model.Q.label}")
    H, inclusion = subgroup_as_group(sub, label=f"{model.Q.label}[{sub.order}]")
    return TwistModel(model.G, H, model.alpha.compose(inclusion))


def minimal_galois_subgroup(model: TwistModel, verify: bool = False) -> Subgroup:
    """
    α⁻¹(Z(G)): the largest subgroup of Q over which the model is Galois.

    With ``verify`` every subgroup of Q is restricted to and tested.

    Raises:
        TheoremViolationError: If the scan finds a Galois restriction outside α⁻¹(Z(G))
    """
    minimal = model.alpha.preimage(center(model.G))
    if verify:
        for sub in all_subgroups(model.Q):
            galois = is_twist_galois(restrict_model(model, sub))
            if galois != sub.is_subgroup_of(minimal):
                raise TheoremViolationError(
                    f"restriction of {model!r} to {sub} is {'Galois' if galois else 'not Galois'}"
                )
    return minimal


def galois_conjugates(model: TwistModel) -> list[TwistModel]:
    """Distinct models whose α is G-conjugate to the given one, sorted by images."""
    seen = sorted({model.alpha.conjugated(g).images for g in model.G.elements})
    return [TwistModel(model.G, model.Q, Homomorphism(model.Q, model.G, i, validate=False)) for i in seen]


def classify_models(
    G: FiniteGroup, Q: FiniteGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> list[ModelClass]:
    """
    Isomorphism classes of models: Hom(Q, G) up to G-conjugacy.

    Raises:
        BudgetExceededError: If the hom search exceeds the budget
        TheoremViolationError: If a class size differs from |G|/d
    """
    classes = []
    for hom_class in conjugacy_partition_homs(enumerate_homs(Q, G, budget), G):
        model = TwistModel(G, Q, hom_class.representative)
        d = model.centralizer_order
        if hom_class.size * d != G.order:
            raise TheoremViolationError(
                f"class of {list(hom_class.canonical)} has size {hom_class.size}, expected {G.order // d}"
            )
        classes.append(ModelClass(hom_class.canonical, hom_class.size, is_twist_galois(model), d))
    logger.info(f"Models of ({G.label}, {Q.label}): {len(classes)} classes")
    return classes
