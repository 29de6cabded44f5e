"""Property suites run by ``verify`` over the catalog sweep."""

from __future__ import annotations

import logging
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from ..cohomology import (
    enumerate_cocycles,
    h1_classes,
    h2_abelian,
    h2_order_by_enumeration,
    obstruction_report,
)
from ..extensions import (
    GroupExtension,
    Section,
    complements_of_kernel,
    decompose_quotient,
    enumerate_sections,
    minimal_descent,
    nondescending_example,
    split_extension,
    verify_normal_core_identity,
)
from ..groups import (
    FiniteGroup,
    GroupAction,
    all_subgroups,
    center,
    centralizer,
    conjugacy_partition_homs,
    enumerate_actions,
    enumerate_homs,
    group_from_name,
    normal_core,
    quotient_group,
)
from ..twisting import (
    PointClass,
    TwistModel,
    central_homs,
    classify_models,
    count_rational_points,
    crux_check,
    is_twist_galois,
    minimal_galois_subgroup,
    model_independence_check,
    specialization_report,
)
from ..utils.config import SearchBudget
from ..utils.errors import GroupValidationError, TheoremViolationError
from .oracles import (
    brute_force_center,
    brute_force_complements,
    brute_force_homs,
    largest_normal_subgroup_inside,
)
from .sweep_planner import SweepCase, SweepPlan, TwistPair, build_sweep_plan

logger = logging.getLogger(__name__)

H2_ORACLE_QUOTIENTS = ("C1", "C2", "C3")
H2_ORACLE_MODULES = ("C2", "C3", "C4", "V4")
H2_EXPECTED = (("C2", "C2", 2), ("C3", "C2", 1))
OBSTRUCTION_EXPECTED = (("S3", "C2", 1), ("C2", "C2", 2), ("Q8", "C2", 2))


@dataclass
class SuiteResult:
    """Outcome of one property suite."""

    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, message: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(message)
            logger.error(f"[{self.name}] {message}")

    def check(self, label: str, fn: Callable[..., bool], *args: Any) -> None:
        """Run ``fn(*args)``; a falsy result or a TheoremViolationError is a failure."""
        try:
            ok = bool(fn(*args))
        except TheoremViolationError as e:
            self.record(False, f"{label}: {e}")
            return
        self.record(ok, label)

    def completes(self, label: str, fn: Callable[..., Any], *args: Any) -> None:
        """Pass unless ``fn`` raises TheoremViolationError."""

        def run() -> bool:
            fn(*args)
            return True

        self.check(label, run)

    def to_dict(self, include_timings: bool = False) -> dict[str, Any]:
        data: dict[str, Any] = {
            "name": self.name,
            "status": "pass" if self.passed else "fail",
            "checked": self.checked,
            "failures": list(self.failures),
        }
        if include_timings:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data


class Verifier:
    """Runs every property suite over a sweep plan."""

    def __init__(self, config: dict[str, Any]):
        """
        Args:
            config: Full configuration (budgets, validation and sweep sections)
        """
        self.config = config
        self.budget = SearchBudget.from_config(config)
        self.sweep_cfg = config.get("sweep", {}) or {}
        self.plan: SweepPlan = build_sweep_plan(config)
        self._extensions: dict[int, GroupExtension] = {}
        self._sections: dict[int, list[Section]] = {}

    # ------------------------------------------------------------------
    # Entry point
    # ------------------------------------------------------------------

    def run(self) -> list[SuiteResult]:
        """
        Run all suites in a fixed order.

        Raises:
            BudgetExceededError: If the sweep asks for more than the budget allows
        """
        suites = [
            ("core_groups", self.suite_core_groups),
            ("sections", self.suite_sections),
            ("minimal_descent", self.suite_descent),
            ("nondescending_construction", self.suite_nondescending),
            ("twisting_lemma", self.suite_twisting_lemma),
            ("galois_criterion", self.suite_galois_criterion),
            ("specialization_crux", self.suite_crux),
            ("specialization_counts", self.suite_specialization),
            ("model_independence", self.suite_model_independence),
            ("cohomology", self.suite_cohomology),
        ]
        results = []
        for name, runner in suites:
            suite = SuiteResult(name)
            start = time.perf_counter()
            runner(suite)
            suite.elapsed_ms = (time.perf_counter() - start) * 1000
            logger.info(
                f"Suite {name}: {suite.checked} checks, {len(suite.failures)} failures "
                f"({suite.elapsed_ms:.0f} ms)"
            )
            results.append(suite)
        return results

    # ------------------------------------------------------------------
    # Shared data
    # ------------------------------------------------------------------

    def _catalog_groups(self) -> list[FiniteGroup]:
        names = dict.fromkeys(
            [c.kernel for c in self.plan.cases]
            + [c.quotient for c in self.plan.cases]
            + [p.kernel for p in self.plan.pairs]
            + [p.quotient for p in self.plan.pairs]
        )
        return [group_from_name(n) for n in names]

    def _extension_for(self, case: SweepCase) -> GroupExtension:
        if case.index not in self._extensions:
            self._extensions[case.index] = split_extension(case.action.target, case.action.actor, case.action)
        return self._extensions[case.index]

    def _sections_for(self, case: SweepCase) -> list[Section]:
        if case.index not in self._sections:
            self._sections[case.index] = enumerate_sections(self._extension_for(case), self.budget)
        return self._sections[case.index]

    def _pair_data(self, pair: TwistPair) -> tuple[FiniteGroup, FiniteGroup, list[PointClass]]:
        G, Q = group_from_name(pair.kernel), group_from_name(pair.quotient)
        points = [PointClass(h) for h in enumerate_homs(Q, G, self.budget)]
        return G, Q, points

    # ------------------------------------------------------------------
    # Suites
    # ------------------------------------------------------------------

    def suite_core_groups(self, suite: SuiteResult) -> None:
        scan_order = int(self.sweep_cfg.get("subgroup_scan_order", 24))
        hom_limit = int(self.sweep_cfg.get("brute_force_hom_limit", 2_000_000))

        for G in self._catalog_groups():
            suite.completes(f"{G.label}: associative on all triples", _revalidate_exhaustively, G)
            suite.record(
                list(center(G).elements) == brute_force_center(G), f"{G.label}: center matches scan"
            )
            if G.order > scan_order:
                continue
            for H in all_subgroups(G):
                core = normal_core(G, H)
                suite.record(
                    core == largest_normal_subgroup_inside(G, H),
                    f"{G.label}: core of {list(H.elements)} is the largest normal subgroup inside it",
                )
                if H.is_normal():
                    suite.record(
                        centralizer(G, H).is_normal(),
                        f"{G.label}: centralizer of normal {list(H.elements)} is normal",
                    )
                    _, projection = quotient_group(G, H)
                    suite.record(projection.kernel() == H, f"{G.label}: quotient kernel recovers N")

        for pair in self.plan.pairs:
            G, Q = group_from_name(pair.kernel), group_from_name(pair.quotient)
            homs = enumerate_homs(Q, G, self.budget)
            if G.order**Q.order <= hom_limit:
                suite.record(
                    sorted(h.images for h in homs) == brute_force_homs(Q, G, hom_limit),
                    f"Hom{pair.label} matches brute force",
                )
            for hom_class in conjugacy_partition_homs(homs, G):
                index = G.order // centralizer(G, hom_class.representative.image()).order
                suite.record(
                    hom_class.size == index,
                    f"Hom{pair.label}: class {list(hom_class.canonical)} has size (G : C_G(img))",
                )

    def suite_sections(self, suite: SuiteResult) -> None:
        scan_order = int(self.sweep_cfg.get("subgroup_scan_order", 24))
        for case in self.plan.cases:
            sections = self._sections_for(case)
            ext = self._extension_for(case)
            images = sorted(s.image.elements for s in sections)
            complements = [h.elements for h in complements_of_kernel(ext, self.budget)]
            suite.record(
                len(set(images)) == len(images) and images == complements,
                f"{case.label}: section images biject onto complements",
            )
            for s in sections:
                suite.record(
                    s.image.order == ext.quotient.order and s.image.intersection(ext.kernel_image).is_trivial(),
                    f"{case.label}: {s!r} meets ι(G) trivially",
                )
            if ext.total.order <= scan_order:
                scanned = brute_force_complements(ext.total, ext.kernel_image, ext.quotient.order)
                suite.record(
                    [list(c) for c in complements] == scanned,
                    f"{case.label}: complements match subgroup scan",
                )

    def suite_descent(self, suite: SuiteResult) -> None:
        for case in self.plan.cases:
            sections = self._sections_for(case)
            ext = self._extension_for(case)
            for s in sections[: self.budget.max_sections]:
                label = f"{case.label} {s!r}"
                suite.completes(f"{label}: minimal descent", minimal_descent, ext, s, self.budget)
                suite.check(f"{label}: V is the normal core", verify_normal_core_identity, ext, s)
                suite.completes(f"{label}: quotient decomposition", decompose_quotient, ext, s)

    def suite_nondescending(self, suite: SuiteResult) -> None:
        for name in self.plan.nonabelian:
            suite.completes(
                f"{name}: twisted section is valid and not Galois",
                nondescending_example,
                group_from_name(name),
            )

    def suite_twisting_lemma(self, suite: SuiteResult) -> None:
        for pair in self.plan.pairs:
            G, Q, points = self._pair_data(pair)
            models = [TwistModel(G, Q, p.phi) for p in points]
            for model in models:
                for point in points:
                    suite.completes(f"{pair.label} {model!r} over {point!r}", count_rational_points, model, point)

    def suite_galois_criterion(self, suite: SuiteResult) -> None:
        for pair in self.plan.pairs:
            G, Q, points = self._pair_data(pair)
            for point in points:
                model = TwistModel(G, Q, point.phi)
                suite.completes(f"{pair.label} {model!r}: Galois criteria agree", is_twist_galois, model)
                suite.completes(
                    f"{pair.label} {model!r}: α⁻¹(Z(G)) is the largest Galois restriction",
                    minimal_galois_subgroup,
                    model,
                    True,
                )
                if G.is_abelian:
                    suite.check(f"{pair.label} {model!r}: abelian twist is Galois", is_twist_galois, model)

    def suite_crux(self, suite: SuiteResult) -> None:
        for pair in self.plan.pairs:
            G, Q, points = self._pair_data(pair)
            by_class: dict[tuple[int, ...], list[PointClass]] = {}
            for p in points:
                by_class.setdefault(p.canonical, []).append(p)
            for members in by_class.values():
                for lift in members:
                    model = TwistModel(G, Q, lift.phi)
                    for point in members:
                        suite.record(
                            crux_check(model, point, self.budget).passed,
                            f"{pair.label} {model!r} over {point!r}: kernel inside α⁻¹(Z(G))",
                        )

    def suite_specialization(self, suite: SuiteResult) -> None:
        for pair in self.plan.pairs:
            G, Q, points = self._pair_data(pair)
            seen: set[tuple[int, ...]] = set()
            for point in points:
                if point.canonical in seen:
                    continue
                seen.add(point.canonical)
                model = TwistModel(G, Q, point.phi)
                label = f"{pair.label} {model!r}"
                try:
                    report = specialization_report(model, points)
                except TheoremViolationError as e:
                    suite.record(False, f"{label}: {e}")
                    continue
                suite.record(report.d is not None, f"{label}: model has rational points")
                if G.is_abelian:
                    suite.record(report.d == G.order, f"{label}: d = |G| for abelian G")

    def suite_model_independence(self, suite: SuiteResult) -> None:
        for pair in self.plan.pairs:
            G, Q, points = self._pair_data(pair)
            for alpha0 in central_homs(Q, G, self.budget):
                suite.record(
                    model_independence_check(alpha0, points),
                    f"{pair.label} α₀={list(alpha0.images)}: partition unchanged",
                )

    def suite_cohomology(self, suite: SuiteResult) -> None:
        for case in self.plan.cases:
            suite.record(
                len(enumerate_cocycles(case.action, self.budget)) == len(self._sections_for(case)),
                f"{case.label}: |Z1| equals the section count",
            )

        for pair in self.plan.pairs:
            G, Q = group_from_name(pair.kernel), group_from_name(pair.quotient)
            suite.check(
                f"{pair.label}: H1 classes match model classes", _h1_matches_models, G, Q, self.budget
            )

        for q_name, a_name, expected in H2_EXPECTED:
            Q, A = group_from_name(q_name), group_from_name(a_name)
            suite.check(
                f"H2({q_name}, {a_name}) has order {expected}",
                _h2_has_order,
                Q,
                A,
                None,
                expected,
                self.budget,
            )

        for q_name in H2_ORACLE_QUOTIENTS:
            for a_name in H2_ORACLE_MODULES:
                Q, A = group_from_name(q_name), group_from_name(a_name)
                for action in enumerate_actions(Q, A, self.budget):
                    suite.check(
                        f"H2({q_name}, {a_name}) {action!r} matches enumeration",
                        _h2_has_order,
                        Q,
                        A,
                        action,
                        None,
                        self.budget,
                    )

        for g_name, q_name, expected in OBSTRUCTION_EXPECTED:
            G, Q = group_from_name(g_name), group_from_name(q_name)
            suite.check(
                f"obstruction group of ({g_name}, {q_name}) has order {expected}",
                _obstruction_has_order,
                G,
                Q,
                expected,
                self.budget,
            )


def _revalidate_exhaustively(group: FiniteGroup) -> None:
    try:
        FiniteGroup(group.table, group.label, exhaustive_order=group.order)
    except GroupValidationError as e:
        raise TheoremViolationError(f"catalog group fails validation: {e}") from e


def _h1_matches_models(G: FiniteGroup, Q: FiniteGroup, budget: SearchBudget) -> bool:
    return len(h1_classes(Q, G, budget=budget)) == len(classify_models(G, Q, budget))


def _h2_has_order(
    Q: FiniteGroup,
    A: FiniteGroup,
    action: GroupAction | None,
    expected: int | None,
    budget: SearchBudget,
) -> bool:
    """Linear-algebra order equals the exhaustive count (and ``expected`` when given)."""
    order = h2_abelian(Q, A, action, budget).order
    if expected is not None and order != expected:
        return False
    return order == h2_order_by_enumeration(Q, A, action)


def _obstruction_has_order(G: FiniteGroup, Q: FiniteGroup, expected: int, budget: SearchBudget) -> bool:
    report = obstruction_report(G, Q, budget=budget)
    return (1 if report.h2 is None else report.h2.order) == expected


def verification_report(results: list[SuiteResult], include_timings: bool = False) -> dict[str, Any]:
    passed = all(r.passed for r in results)
    return {
        "status": "pass" if passed else "fail",
        "suites": [r.to_dict(include_timings) for r in results],
    }
