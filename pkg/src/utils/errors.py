"""Exception hierarchy for the descent engine"""


class EngineError(Exception):
    """Base class for every error raised by the engine."""

    pass


class GroupValidationError(EngineError):
    """Raised when group data or an operation precondition is invalid."""

    pass


class BudgetExceededError(EngineError):
    """Raised when a search would exceed its configured bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(f"{message} (bound: {bound})")
        self.bound = bound


class TheoremViolationError(EngineError):
    """Raised when a cross-check that is a theorem fails.

    This always indicates an implementation bug, never bad input.
    """

    pass


class ScenarioError(EngineError):
    """Base class for scenario file problems."""

    pass


class ScenarioParseError(ScenarioError):
    """Raised when a scenario file is not well-formed."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        location = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{location}{message}")
        self.line = line
        self.column = column


class ScenarioValidationError(ScenarioError):
    """Raised when a scenario task is structurally invalid."""

    def __init__(self, message: str, task_index: int | None = None, field: str | None = None):
        prefix = ""
        if task_index is not None:
            prefix = f"task {task_index}"
            if field:
                prefix += f" ({field})"
            prefix += ": "
        super().__init__(f"{prefix}{message}")
        self.task_index = task_index
        self.field = field
