"""Specialization of twisted models at points, and the induced equivalence on points."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

from ..groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    center,
    enumerate_homs,
    subgroup_as_group,
    subgroup_closure,
    trivial_subgroup,
)
from ..utils.config import DEFAULT_BUDGET, SearchBudget
from ..utils.errors import GroupValidationError, TheoremViolationError
from .models import PointClass, TwistModel, count_rational_points, galois_conjugates, minimal_galois_subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CruxReport:
    kernel: Subgroup
    minimal_galois: Subgroup
    kernel_contained: bool
    restriction_trivial: bool
    specialization_join: Subgroup
    join_contained: bool

    @property
    def passed(self) -> bool:
        return self.kernel_contained and self.restriction_trivial and self.join_contained

    def to_dict(self) -> dict[str, Any]:
        return {
            "kernel": list(self.kernel.elements),
            "minimal_galois_subgroup": list(self.minimal_galois.elements),
            "kernel_contained": self.kernel_contained,
            "restriction_trivial": self.restriction_trivial,
            "specialization_join": list(self.specialization_join.elements),
            "join_contained": self.join_contained,
        }


@dataclass(frozen=True)
class SpecializationClass:
    canonical: tuple[int, ...]
    points: int
    count: int


@dataclass
class SpecializationReport:
    model: TwistModel
    classes: list[SpecializationClass] = field(default_factory=list)
    d: int | None = None
    center_order: int = 1
    conjugate_models: int | None = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "alpha": list(self.model.alpha.images),
            "center_order": self.center_order,
            "d": self.d,
            "conjugate_models": self.conjugate_models,
            "classes": [
                {"phi": list(c.canonical), "points": c.points, "count": c.count} for c in self.classes
            ],
        }


def _check_shared(points: Sequence[PointClass]) -> None:
    if points and any(p.G != points[0].G or p.Q != points[0].Q for p in points):
        raise GroupValidationError("points are over different (G, Q)")


def specialization_subgroup(point: PointClass) -> Subgroup:
    """ker φ; the same for every member of the conjugacy class."""
    return point.phi.kernel()


def is_g_galois_specialization(point: PointClass) -> bool:
    """The specialized fiber is a single G-Galois field extension iff φ is onto."""
    return point.phi.is_surjective()


def central_homs(
    Q: FiniteGroup, G: FiniteGroup, budget: SearchBudget = DEFAULT_BUDGET
) -> list[Homomorphism]:
    """Homomorphisms Q -> G with image in Z(G), i.e. the Galois twists."""
    z_group, inclusion = subgroup_as_group(center(G), label=f"Z({G.label})")
    return [inclusion.compose(h) for h in enumerate_homs(Q, z_group, budget)]


def pointwise_product(phi: Homomorphism, alpha0: Homomorphism) -> Homomorphism:
    """q -> φ(q)·α₀(q); a homomorphism when α₀ is central."""
    G = phi.codomain
    return Homomorphism(phi.domain, G, G.table[phi.array, alpha0.array], validate=False)


def specialization_join(point: PointClass, budget: SearchBudget = DEFAULT_BUDGET) -> Subgroup:
    """Join of ker(φ·α₀) over all central α₀."""
    Q = point.Q
    join = trivial_subgroup(Q)
    for alpha0 in central_homs(Q, point.G, budget):
        kernel = pointwise_product(point.phi, alpha0).kernel()
        join = subgroup_closure(Q, join.elements + kernel.elements)
    return join


def crux_check(
    model: TwistModel, point: PointClass, budget: SearchBudget = DEFAULT_BUDGET
) -> CruxReport:
    """
    For a lift α of φ: ker φ lies in α⁻¹(Z(G)), α is trivial on ker φ, and the
    join of ker(φ·α₀) over central α₀ also lies in α⁻¹(Z(G)).

    Raises:
        GroupValidationError: If α is not G-conjugate to φ
    """
    if not model.same_groups(point.G, point.Q):
        raise GroupValidationError("model and point are over different (G, Q)")
    if PointClass(model.alpha) != point:
        raise GroupValidationError(f"{model!r} is not a lift of {point!r}")

    kernel = specialization_subgroup(point)
    minimal = minimal_galois_subgroup(model)
    restriction_trivial = not model.alpha.array[list(kernel.elements)].any()
    join = specialization_join(point, budget)
    return CruxReport(
        kernel=kernel,
        minimal_galois=minimal,
        kernel_contained=kernel.is_subgroup_of(minimal),
        restriction_trivial=restriction_trivial,
        specialization_join=join,
        join_contained=join.is_subgroup_of(minimal),
    )


def point_partition(points: Sequence[PointClass]) -> list[list[PointClass]]:
    """
    Group points by canonical form, classes ordered by canonical form.

    Raises:
        GroupValidationError: If the points are over different (G, Q)
    """
    points = list(points)
    _check_shared(points)
    classes: dict[tuple[int, ...], list[PointClass]] = {}
    for p in points:
        classes.setdefault(p.canonical, []).append(p)
    return [classes[key] for key in sorted(classes)]


def _index_partition(points: Sequence[PointClass]) -> set[frozenset[int]]:
    keyed: dict[tuple[int, ...], set[int]] = {}
    for i, p in enumerate(points):
        keyed.setdefault(p.canonical, set()).add(i)
    return {frozenset(v) for v in keyed.values()}


def specialization_report(model: TwistModel, points: Sequence[PointClass]) -> SpecializationReport:
    """
    Per-class fiber counts for a model over a list of points.

    Raises:
        GroupValidationError: If points and model are over different groups
        TheoremViolationError: If d fails divisibility, counts vary within a
            class, or the number of conjugate models is not |G|/d
    """
    points = list(points)
    _check_shared(points)
    G = model.G
    report = SpecializationReport(model=model, center_order=center(G).order)
    if not points:
        logger.info(f"{model!r}: no points, empty report")
        return report

    for members in point_partition(points):
        counts = {count_rational_points(model, p) for p in members}
        if len(counts) != 1:
            raise TheoremViolationError(f"fiber counts vary within class {members[0]!r}: {sorted(counts)}")
        count = counts.pop()
        report.classes.append(SpecializationClass(members[0].canonical, len(members), count))
        if count:
            report.d = count

    if report.d is not None:
        d = report.d
        if d % report.center_order or G.order % d:
            raise TheoremViolationError(f"d={d} violates |Z(G)| | d | |G| for {model!r}")
        conjugates = len(galois_conjugates(model))
        if conjugates * d != G.order:
            raise TheoremViolationError(f"{conjugates} conjugate models, expected {G.order // d}")
        report.conjugate_models = conjugates
    return report


def model_independence_check(alpha0: Homomorphism, points: Sequence[PointClass]) -> bool:
    """
    The partition of points is unchanged when read through the Galois model α₀,
    i.e. after replacing each φ by φ·α₀.

    Raises:
        GroupValidationError: If α₀ is not central or the points are mixed
    """
    points = list(points)
    _check_shared(points)
    if not alpha0.image().is_subgroup_of(center(alpha0.codomain)):
        raise GroupValidationError("alpha0 does not have central image")
    if points and (alpha0.domain != points[0].Q or alpha0.codomain != points[0].G):
        raise GroupValidationError("alpha0 and points are over different (G, Q)")

    translated = [PointClass(pointwise_product(p.phi, alpha0)) for p in points]
    same = _index_partition(points) == _index_partition(translated)
    if not same:
        logger.error(f"partition changes under central translation by {list(alpha0.images)}")
    return same
