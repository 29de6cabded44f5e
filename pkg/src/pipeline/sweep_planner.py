"""Helpers for building the catalog sweep that verify runs over."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import product
from typing import Any, Iterable

from ..groups import GroupAction, enumerate_actions, group_from_name
from ..utils.config import SearchBudget
from ..utils.errors import GroupValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepCase:
    """One split extension G ⋊_θ Q of the sweep."""

    index: int
    kernel: str
    quotient: str
    action: GroupAction

    @property
    def total_order(self) -> int:
        return self.action.target.order * self.action.actor.order

    @property
    def label(self) -> str:
        """Human readable description."""

        kind = "trivial" if self.action.is_trivial() else f"action#{self.index}"
        return f"{self.kernel} : {self.quotient} ({kind})"


@dataclass(frozen=True)
class TwistPair:
    """A (G, Q) pair for the twisting suites."""

    kernel: str
    quotient: str

    @property
    def label(self) -> str:
        return f"({self.kernel}, {self.quotient})"


@dataclass(frozen=True)
class SweepPlan:
    """Describes which extensions and pairs the suites iterate over."""

    cases: list[SweepCase]
    pairs: list[TwistPair]
    nonabelian: list[str]

    @property
    def active(self) -> bool:
        return bool(self.cases or self.pairs)


def _clean_names(raw: Iterable[Any]) -> list[str]:
    cleaned: list[str] = []
    for entry in raw or []:
        if entry is None:
            continue
        text = str(entry).strip()
        if text and text not in cleaned:
            cleaned.append(text)
    return cleaned


def _resolve(names: list[str]) -> list[str]:
    for name in names:
        try:
            group_from_name(name)
        except GroupValidationError as e:
            raise GroupValidationError(f"sweep: {e}") from e
    return names


def build_sweep_plan(config: dict[str, Any] | None) -> SweepPlan:
    """Create a SweepPlan from the ``sweep`` and ``budgets`` sections of a configuration."""

    config = config or {}
    sweep_cfg = config.get("sweep", {}) or {}
    budget = SearchBudget.from_config(config)

    kernels = _resolve(_clean_names(sweep_cfg.get("kernels", [])))
    twisting_only = _resolve(_clean_names(sweep_cfg.get("twisting_kernels", [])))
    quotients = _resolve(_clean_names(sweep_cfg.get("quotients", [])))

    if sweep_cfg.get("abelian_only"):
        kernels = [k for k in kernels if group_from_name(k).is_abelian]
        twisting_only = [k for k in twisting_only if group_from_name(k).is_abelian]

    total_cap = min(int(sweep_cfg.get("max_descent_total_order", 48)), budget.max_total_order)
    action_cap = int(sweep_cfg.get("max_action_kernel_order", 8))

    cases: list[SweepCase] = []
    for kernel_name, quotient_name in product(kernels, quotients):
        G, Q = group_from_name(kernel_name), group_from_name(quotient_name)
        if G.order * Q.order > total_cap:
            continue
        if G.order <= action_cap:
            actions = enumerate_actions(Q, G, budget)
        else:
            actions = [GroupAction.trivial(Q, G)]
        for action in actions:
            cases.append(SweepCase(len(cases), kernel_name, quotient_name, action))

    kernel_cap = int(sweep_cfg.get("twisting_max_kernel_order", 24))
    quotient_cap = int(sweep_cfg.get("twisting_max_quotient_order", 8))
    pairs: list[TwistPair] = []
    for kernel_name, quotient_name in product(kernels + twisting_only, quotients):
        G, Q = group_from_name(kernel_name), group_from_name(quotient_name)
        if G.order > kernel_cap or Q.order > quotient_cap:
            continue
        if G.order * Q.order > budget.max_total_order:
            continue
        pairs.append(TwistPair(kernel_name, quotient_name))

    # the non-descending construction lives in G x G
    nonabelian = [
        k
        for k in kernels
        if not group_from_name(k).is_abelian and group_from_name(k).order ** 2 <= budget.max_total_order
    ]
    logger.info(f"Sweep plan: {len(cases)} extensions, {len(pairs)} twisting pairs")
    return SweepPlan(cases=cases, pairs=pairs, nonabelian=nonabelian)
