"""Test the catalog sweep plan"""

import pytest

from src.pipeline import build_sweep_plan
from src.utils.errors import GroupValidationError


def test_small_sweep(small_sweep_config):
    plan = build_sweep_plan(small_sweep_config)
    # one case per action: C2:C2 1, C2:C3 1, C3:C2 2, C3:C3 1, S3:C2 4, S3:C3 3
    assert len(plan.cases) == 12
    assert [c.index for c in plan.cases] == list(range(12))
    assert [(p.kernel, p.quotient) for p in plan.pairs] == [
        ("C2", "C2"),
        ("C2", "C3"),
        ("C3", "C2"),
        ("C3", "C3"),
        ("S3", "C2"),
        ("S3", "C3"),
    ]
    assert plan.nonabelian == ["S3"]
    assert plan.active


def test_total_order_cap():
    config = {"sweep": {"kernels": ["C2", "S3"], "quotients": ["C2"], "max_descent_total_order": 4}}
    plan = build_sweep_plan(config)
    assert len(plan.cases) == 1
    case = plan.cases[0]
    assert case.total_order == 4
    assert case.label == "C2 : C2 (trivial)"


def test_large_kernels_use_the_trivial_action_only():
    config = {"sweep": {"kernels": ["S3"], "quotients": ["C2"], "max_action_kernel_order": 2}}
    plan = build_sweep_plan(config)
    assert len(plan.cases) == 1
    assert plan.cases[0].action.is_trivial()


def test_abelian_only(small_sweep_config):
    small_sweep_config["sweep"]["abelian_only"] = True
    plan = build_sweep_plan(small_sweep_config)
    assert {c.kernel for c in plan.cases} == {"C2", "C3"}
    assert plan.nonabelian == []


def test_names_are_cleaned():
    plan = build_sweep_plan({"sweep": {"kernels": [" C2", "C2", None], "quotients": ["C2"]}})
    assert [p.kernel for p in plan.pairs] == ["C2"]


def test_empty_plan():
    plan = build_sweep_plan({})
    assert not plan.active
    assert plan.nonabelian == []


def test_unknown_name():
    with pytest.raises(GroupValidationError, match="sweep:"):
        build_sweep_plan({"sweep": {"kernels": ["Z7"], "quotients": ["C2"]}})
