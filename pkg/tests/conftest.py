"""Global test configuration and shared catalog fixtures

Element indices used throughout the tests:

- C_n: residues, 1 generates.
- S3: 0 e, 1 (2 3), 2 (1 2), 3 (1 2 3), 4 (1 3 2), 5 (1 3); A3 = {0, 3, 4}.
- Q8: 2 is -1, the only nontrivial central element.
- Products and semidirect products: (g, q) at index g*|Q| + q.
"""

import pytest

from src.groups import GroupAction, group_from_name
from src.utils import ConfigManager

TRANSPOSITION_12 = 2
TRANSPOSITION_13 = 5
A3 = (0, 3, 4)
Q8_MINUS_ONE = 2


@pytest.fixture
def c1():
    return group_from_name("C1")


@pytest.fixture
def c2():
    return group_from_name("C2")


@pytest.fixture
def c3():
    return group_from_name("C3")


@pytest.fixture
def c4():
    return group_from_name("C4")


@pytest.fixture
def v4():
    return group_from_name("V4")


@pytest.fixture
def s3():
    return group_from_name("S3")


@pytest.fixture
def q8():
    return group_from_name("Q8")


@pytest.fixture
def s4():
    return group_from_name("S4")


@pytest.fixture
def inversion_action(c2, c3):
    """C2 acting on C3 by inversion."""
    return GroupAction(c2, c3, [[0, 1, 2], [0, 2, 1]])


@pytest.fixture
def default_config(tmp_path_factory):
    return ConfigManager(str(tmp_path_factory.mktemp("presets"))).get_default_config()


@pytest.fixture
def small_sweep_config(default_config):
    """A sweep that finishes in a few seconds."""
    default_config["sweep"].update(
        {
            "kernels": ["C2", "C3", "S3"],
            "twisting_kernels": [],
            "quotients": ["C2", "C3"],
            "max_descent_total_order": 18,
            "twisting_max_kernel_order": 6,
            "twisting_max_quotient_order": 3,
        }
    )
    return default_config


# Preserve existing tmp_path fixture override
@pytest.fixture
def tmp_path(tmp_path_factory):
    """Provide a temporary directory for tests"""
    return tmp_path_factory.mktemp("test_data")
