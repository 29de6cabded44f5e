"""Pipeline module: scenario execution and catalog verification"""

from .executor import (
    EXIT_BUDGET,
    EXIT_INVALID,
    EXIT_OK,
    EXIT_THEOREM,
    TASK_KINDS,
    PreparedTask,
    RunResult,
    ScenarioRunner,
    exit_code_for,
)
from .sweep_planner import SweepCase, SweepPlan, TwistPair, build_sweep_plan
from .verifier import SuiteResult, Verifier, verification_report

__all__ = [
    "ScenarioRunner",
    "PreparedTask",
    "RunResult",
    "TASK_KINDS",
    "EXIT_OK",
    "EXIT_INVALID",
    "EXIT_THEOREM",
    "EXIT_BUDGET",
    "exit_code_for",
    "SweepCase",
    "SweepPlan",
    "TwistPair",
    "build_sweep_plan",
    "SuiteResult",
    "Verifier",
    "verification_report",
]
