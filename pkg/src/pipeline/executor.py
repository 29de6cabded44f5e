"""Scenario execution module

A scenario is a JSON object ``{"tasks": [...]}``. Every task carries a
``kind`` and kind-specific fields:

- ``descent``: ``extension``, optional ``section`` (images; default canonical section)
- ``sections``: ``extension``
- ``twist-count``: ``G``, ``Q``, ``alpha``, ``points`` (list of image arrays) or ``phi``
- ``classify-models``: ``G``, ``Q``
- ``specialization``: ``G``, ``Q``, ``alpha``, ``points`` (list or ``"all"``), optional ``alpha0``
- ``cohomology``: ``degree`` (1 or 2), ``Q``, ``G`` (degree 1) or ``A`` (degree 2), optional ``action``
- ``obstruction``: ``G``, ``Q``, optional ``action`` (on G)

Groups are catalog names or ``{"label", "order", "table"}`` objects. An
extension is ``{"kernel", "quotient", "action"}`` (split),
``{"kernel", "total", "quotient", "iota", "pi"}`` or ``{"total", "normal"}``.
Actions are ``"trivial"`` or one permutation of the acted-on group per element.
"""

import logging
import time
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Any

from ..cohomology import h1_classes, h2_abelian, obstruction_report
from ..extensions import (
    GroupExtension,
    Section,
    complements_of_kernel,
    decompose_quotient,
    enumerate_sections,
    extension_from_normal_subgroup,
    is_model_galois,
    minimal_descent,
    split_extension,
    verify_normal_core_identity,
)
from ..groups import FiniteGroup, GroupAction, Homomorphism, Subgroup, build_group, enumerate_homs
from ..twisting import (
    PointClass,
    TwistModel,
    classify_models,
    count_rational_points,
    crux_check,
    is_g_galois_specialization,
    model_independence_check,
    point_partition,
    specialization_report,
)
from ..utils import StructuredLogger, read_document
from ..utils.config import SearchBudget
from ..utils.errors import (
    BudgetExceededError,
    EngineError,
    GroupValidationError,
    ScenarioError,
    ScenarioValidationError,
    TheoremViolationError,
)

logger = logging.getLogger(__name__)

TASK_KINDS = (
    "descent",
    "sections",
    "twist-count",
    "classify-models",
    "specialization",
    "cohomology",
    "obstruction",
)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_THEOREM = 2
EXIT_BUDGET = 3


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, BudgetExceededError):
        return EXIT_BUDGET
    if isinstance(error, TheoremViolationError):
        return EXIT_THEOREM
    return EXIT_INVALID


@dataclass(frozen=True)
class PreparedTask:
    """A validated task, ready to execute."""

    index: int
    kind: str
    execute: Callable[[], dict[str, Any]]


@dataclass
class RunResult:
    report: dict[str, Any]
    exit_code: int = EXIT_OK
    rows: list[dict[str, Any]] = field(default_factory=list)


class ScenarioRunner:
    """Validates scenario documents and executes their tasks in order."""

    def __init__(self, config: dict[str, Any], structured_logger: StructuredLogger | None = None):
        """
        Initialize the runner.

        Args:
            config: Full configuration (budgets, validation, report sections)
            structured_logger: Optional logger for persisting reports and timing summaries
        """
        self.config = config
        self.budget = SearchBudget.from_config(config)
        validation = config.get("validation", {}) or {}
        self.validation = {
            "exhaustive_order": int(validation.get("exhaustive_associativity_order", 64)),
            "random_triples": int(validation.get("random_triples", 10_000)),
            "seed": int(validation.get("seed", 0)),
        }
        self.include_timings = bool((config.get("report", {}) or {}).get("include_timings", False))
        self.structured_logger = structured_logger

    # ------------------------------------------------------------------
    # Validation helpers
    # ------------------------------------------------------------------

    def _require(self, task: dict[str, Any], index: int, name: str) -> Any:
        if name not in task:
            raise ScenarioValidationError("missing field", task_index=index, field=name)
        return task[name]

    def _group(self, task: dict[str, Any], index: int, name: str) -> FiniteGroup:
        spec = self._require(task, index, name)
        try:
            return build_group(spec, **self.validation)
        except GroupValidationError as e:
            raise ScenarioValidationError(str(e), task_index=index, field=name) from e

    def _images(self, value: Any, length: int, index: int, name: str) -> list[int]:
        if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
            raise ScenarioValidationError("expected an array of element indices", task_index=index, field=name)
        if len(value) != length:
            raise ScenarioValidationError(
                f"expected {length} images, got {len(value)}", task_index=index, field=name
            )
        return value

    def _hom(self, value: Any, domain: FiniteGroup, codomain: FiniteGroup, index: int, name: str) -> Homomorphism:
        images = self._images(value, domain.order, index, name)
        try:
            return Homomorphism(domain, codomain, images)
        except GroupValidationError as e:
            raise ScenarioValidationError(str(e), task_index=index, field=name) from e

    def _action(self, value: Any, actor: FiniteGroup, target: FiniteGroup, index: int, name: str) -> GroupAction:
        if value is None or value == "trivial":
            return GroupAction.trivial(actor, target)
        try:
            return GroupAction(actor, target, value)
        except GroupValidationError as e:
            raise ScenarioValidationError(str(e), task_index=index, field=name) from e

    def _extension(self, task: dict[str, Any], index: int) -> GroupExtension:
        spec = self._require(task, index, "extension")
        if not isinstance(spec, dict):
            raise ScenarioValidationError("expected an object", task_index=index, field="extension")
        try:
            if "normal" in spec:
                total = self._group(spec, index, "total")
                normal = Subgroup(total, spec["normal"])
                return extension_from_normal_subgroup(total, normal)
            kernel = self._group(spec, index, "kernel")
            quotient = self._group(spec, index, "quotient")
            if "total" in spec:
                total = self._group(spec, index, "total")
                iota = self._hom(self._require(spec, index, "iota"), kernel, total, index, "iota")
                pi = self._hom(self._require(spec, index, "pi"), total, quotient, index, "pi")
                return GroupExtension(kernel, total, quotient, iota, pi)
            action = self._action(spec.get("action"), quotient, kernel, index, "action")
            self._check_order(kernel.order * quotient.order, f"{kernel.label}⋊{quotient.label}")
            return split_extension(kernel, quotient, action)
        except GroupValidationError as e:
            raise ScenarioValidationError(str(e), task_index=index, field="extension") from e

    def _points(self, value: Any, G: FiniteGroup, Q: FiniteGroup, index: int) -> list[PointClass] | None:
        """Point list, or None for ``"all"`` (expanded at run time under the budget)."""
        if value == "all":
            return None
        if not isinstance(value, list):
            raise ScenarioValidationError("expected a list of image arrays or \"all\"", task_index=index, field="points")
        return [PointClass(self._hom(v, Q, G, index, "points")) for v in value]

    def _check_order(self, order: int, label: str) -> None:
        if order > self.budget.max_total_order:
            raise BudgetExceededError(f"{label} has order {order}", self.budget.max_total_order)

    def _check_product(self, G: FiniteGroup, Q: FiniteGroup) -> None:
        self._check_order(G.order * Q.order, f"{G.label}×{Q.label}")

    # ------------------------------------------------------------------
    # Task preparation
    # ------------------------------------------------------------------

    def prepare(self, document: Any) -> list[PreparedTask]:
        """
        Validate every task before any runs.

        Raises:
            ScenarioValidationError: Naming the first offending task and field
        """
        if not isinstance(document, dict) or not isinstance(document.get("tasks"), list):
            raise ScenarioValidationError("scenario must be an object with a 'tasks' array", field="tasks")

        prepared = []
        for index, task in enumerate(document["tasks"]):
            if not isinstance(task, dict):
                raise ScenarioValidationError("task must be an object", task_index=index)
            kind = task.get("kind")
            if kind not in TASK_KINDS:
                raise ScenarioValidationError(f"unknown kind {kind!r}", task_index=index, field="kind")
            builder = getattr(self, f"_prepare_{kind.replace('-', '_')}")
            try:
                execute = builder(task, index)
            except BudgetExceededError as e:
                execute = partial(_raise, e)
            prepared.append(PreparedTask(index, kind, execute))
        logger.info(f"Validated {len(prepared)} tasks")
        return prepared

    def _prepare_descent(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        ext = self._extension(task, index)
        if "section" in task:
            images = self._images(task["section"], ext.quotient.order, index, "section")
            try:
                section = ext.section_from_images(images)
            except GroupValidationError as e:
                raise ScenarioValidationError(str(e), task_index=index, field="section") from e
        elif ext.canonical_section is not None:
            section = ext.canonical_section
        else:
            raise ScenarioValidationError("extension has no canonical section", task_index=index, field="section")
        return lambda: self.run_descent(ext, section)

    def _prepare_sections(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        ext = self._extension(task, index)
        return lambda: self.run_sections(ext)

    def _prepare_twist_count(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        G, Q = self._group(task, index, "G"), self._group(task, index, "Q")
        model = TwistModel(G, Q, self._hom(self._require(task, index, "alpha"), Q, G, index, "alpha"))
        if "phi" in task:
            points: list[PointClass] | None = [PointClass(self._hom(task["phi"], Q, G, index, "phi"))]
        else:
            points = self._points(self._require(task, index, "points"), G, Q, index)
        return lambda: self.run_twist_count(model, points)

    def _prepare_classify_models(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        G, Q = self._group(task, index, "G"), self._group(task, index, "Q")
        return lambda: self.run_classify_models(G, Q)

    def _prepare_specialization(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        G, Q = self._group(task, index, "G"), self._group(task, index, "Q")
        model = TwistModel(G, Q, self._hom(self._require(task, index, "alpha"), Q, G, index, "alpha"))
        points = self._points(task.get("points", "all"), G, Q, index)
        alpha0 = self._hom(task["alpha0"], Q, G, index, "alpha0") if "alpha0" in task else None
        return lambda: self.run_specialization(model, points, alpha0)

    def _prepare_cohomology(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        degree = task.get("degree")
        if degree not in (1, 2):
            raise ScenarioValidationError("degree must be 1 or 2", task_index=index, field="degree")
        Q = self._group(task, index, "Q")
        name = "G" if degree == 1 or "A" not in task else "A"
        target = self._group(task, index, name)
        if degree == 2 and not target.is_abelian:
            raise ScenarioValidationError(f"{target.label} is not abelian", task_index=index, field=name)
        action = self._action(task.get("action"), Q, target, index, "action")
        if degree == 1:
            return lambda: self.run_h1(action)
        return lambda: self.run_h2(action)

    def _prepare_obstruction(self, task: dict[str, Any], index: int) -> Callable[[], dict[str, Any]]:
        G, Q = self._group(task, index, "G"), self._group(task, index, "Q")
        action = self._action(task.get("action"), Q, G, index, "action")
        return lambda: self.run_obstruction(G, Q, action)

    # ------------------------------------------------------------------
    # Task execution
    # ------------------------------------------------------------------

    def run_descent(self, ext: GroupExtension, section: Section) -> dict[str, Any]:
        self._check_order(ext.total.order, ext.total.label)
        report = minimal_descent(ext, section, self.budget)
        if not verify_normal_core_identity(ext, section):
            raise TheoremViolationError("V differs from the normal core of img(s)")
        decomposition = decompose_quotient(ext, section)
        return {
            "extension": _extension_summary(ext),
            "is_galois": is_model_galois(ext, section),
            **report.to_dict(),
            "normal_core_identity": True,
            "decomposition": decomposition.to_dict(),
        }

    def run_sections(self, ext: GroupExtension) -> dict[str, Any]:
        self._check_order(ext.total.order, ext.total.label)
        sections = enumerate_sections(ext, self.budget)
        complements = complements_of_kernel(ext, self.budget)
        images = sorted(s.image.elements for s in sections)
        if images != [h.elements for h in complements]:
            raise TheoremViolationError("section images do not biject onto complements")
        return {
            "extension": _extension_summary(ext),
            "count": len(sections),
            "sections": [list(s.images) for s in sections],
            "galois": [is_model_galois(ext, s) for s in sections],
            "complements": [list(h.elements) for h in complements],
        }

    def run_twist_count(self, model: TwistModel, points: list[PointClass] | None) -> dict[str, Any]:
        self._check_product(model.G, model.Q)
        if points is None:
            points = [PointClass(h) for h in enumerate_homs(model.Q, model.G, self.budget)]
        return {
            "alpha": list(model.alpha.images),
            "centralizer_order": model.centralizer_order,
            "counts": [
                {
                    "phi": list(p.phi.images),
                    "lift": p == PointClass(model.alpha),
                    "count": count_rational_points(model, p),
                }
                for p in points
            ],
        }

    def run_classify_models(self, G: FiniteGroup, Q: FiniteGroup) -> dict[str, Any]:
        self._check_product(G, Q)
        classes = classify_models(G, Q, self.budget)
        return {
            "G": G.label,
            "Q": Q.label,
            "count": len(classes),
            "classes": [c.to_dict() for c in classes],
        }

    def run_specialization(
        self, model: TwistModel, points: list[PointClass] | None, alpha0: Homomorphism | None
    ) -> dict[str, Any]:
        self._check_product(model.G, model.Q)
        if points is None:
            points = [PointClass(h) for h in enumerate_homs(model.Q, model.G, self.budget)]
        report = specialization_report(model, points)
        partition = point_partition(points)
        lift = PointClass(model.alpha)
        result: dict[str, Any] = {
            **report.to_dict(),
            "partition": [[list(p.phi.images) for p in members] for members in partition],
            "g_galois": [is_g_galois_specialization(members[0]) for members in partition],
        }
        crux = [crux_check(model, members[0], self.budget) for members in partition if members[0] == lift]
        if any(not c.passed for c in crux):
            raise TheoremViolationError("kernel of a lift is not inside α⁻¹(Z(G))")
        result["crux"] = [c.to_dict() for c in crux]
        if alpha0 is not None:
            try:
                same = model_independence_check(alpha0, points)
            except GroupValidationError as e:
                raise ScenarioError(str(e)) from e
            if not same:
                raise TheoremViolationError("partition depends on the chosen Galois model")
            result["model_independent"] = same
        return result

    def run_h1(self, action: GroupAction) -> dict[str, Any]:
        classes = h1_classes(action.actor, action.target, action, self.budget)
        return {
            "degree": 1,
            "cocycles": sum(c.size for c in classes),
            "classes": [{"canonical": list(c.canonical), "size": c.size} for c in classes],
        }

    def run_h2(self, action: GroupAction) -> dict[str, Any]:
        h2 = h2_abelian(action.actor, action.target, action, self.budget)
        return {"degree": 2, **h2.to_dict()}

    def run_obstruction(self, G: FiniteGroup, Q: FiniteGroup, action: GroupAction) -> dict[str, Any]:
        return obstruction_report(G, Q, action, self.budget).to_dict()

    # ------------------------------------------------------------------
    # Orchestration
    # ------------------------------------------------------------------

    def _execute(self, task: PreparedTask) -> tuple[dict[str, Any], dict[str, Any], int]:
        start = time.perf_counter()
        entry: dict[str, Any] = {"index": task.index, "kind": task.kind}
        code = EXIT_OK
        try:
            entry["status"] = "ok"
            entry["result"] = task.execute()
        except EngineError as e:
            code = exit_code_for(e)
            entry["status"] = "error"
            entry["error"] = {"type": type(e).__name__, "message": str(e)}
            logger.error(f"Task {task.index} ({task.kind}) failed: {e}")
        except MemoryError:
            code = EXIT_BUDGET
            entry["status"] = "error"
            entry["error"] = {"type": "BudgetExceededError", "message": "out of memory"}
            logger.error(f"Task {task.index} ({task.kind}) ran out of memory")
        elapsed_ms = round((time.perf_counter() - start) * 1000, 3)
        if self.include_timings:
            entry["elapsed_ms"] = elapsed_ms
        row = {"index": task.index, "kind": task.kind, "status": entry["status"], "elapsed_ms": elapsed_ms}
        return entry, row, code

    def run_document(self, document: Any, parallel: bool = False) -> RunResult:
        """
        Validate then execute a parsed scenario.

        Raises:
            ScenarioValidationError: If any task is invalid (nothing is executed)
        """
        tasks = self.prepare(document)
        if parallel and len(tasks) > 1:
            with ThreadPoolExecutor() as pool:
                outcomes = list(pool.map(self._execute, tasks))
        else:
            outcomes = [self._execute(t) for t in tasks]

        exit_code = max((code for _, _, code in outcomes), default=EXIT_OK)
        report = {
            "status": "ok" if exit_code == EXIT_OK else "failed",
            "tasks": [entry for entry, _, _ in outcomes],
        }
        return RunResult(report=report, exit_code=exit_code, rows=[row for _, row, _ in outcomes])

    def run_scenario(self, path: Path, parallel: bool = False, run_name: str | None = None) -> RunResult:
        """
        Run a scenario file and, with a structured logger, persist the report and timings.

        Raises:
            ScenarioParseError: If the file is unreadable or malformed
            ScenarioValidationError: If any task is invalid
        """
        logger.info(f"Running scenario {path}")
        result = self.run_document(read_document(Path(path)), parallel=parallel)
        if self.structured_logger is not None:
            run_dir = self.structured_logger.create_run_directory(run_name)
            self.structured_logger.save_manifest(run_dir, "report", result.report)
            self.structured_logger.create_csv_summary(run_dir, result.rows)
        return result


def _extension_summary(ext: GroupExtension) -> dict[str, Any]:
    return {
        "kernel": ext.kernel.label,
        "total_order": ext.total.order,
        "quotient": ext.quotient.label,
    }


def _raise(error: Exception) -> dict[str, Any]:
    raise error
