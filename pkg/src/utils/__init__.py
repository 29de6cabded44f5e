"""Utilities module"""

from .config import DEFAULT_BUDGET, ConfigManager, SearchBudget
from .errors import (
    BudgetExceededError,
    EngineError,
    GroupValidationError,
    ScenarioError,
    ScenarioParseError,
    ScenarioValidationError,
    TheoremViolationError,
)
from .file_io import (
    dump_document,
    get_safe_filename,
    parse_document,
    read_document,
    read_text_file,
)
from .logger import StructuredLogger, setup_logging

__all__ = [
    "ConfigManager",
    "SearchBudget",
    "DEFAULT_BUDGET",
    "StructuredLogger",
    "setup_logging",
    "EngineError",
    "GroupValidationError",
    "BudgetExceededError",
    "TheoremViolationError",
    "ScenarioError",
    "ScenarioParseError",
    "ScenarioValidationError",
    "read_text_file",
    "parse_document",
    "read_document",
    "dump_document",
    "get_safe_filename",
]
