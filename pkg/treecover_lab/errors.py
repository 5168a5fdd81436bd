"""Exception hierarchy shared by the solvers, the harness and the CLI."""

from typing import Optional

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BUDGET = 2
EXIT_VIOLATION = 3


class LabError(Exception):
    """Base class for every error raised by treecover-lab."""

    exit_code = EXIT_USAGE


class GraphParseError(LabError, ValueError):
    """Raised when a graph6 string or an edge list cannot be decoded."""

    def __init__(
        self, message: str, offset: Optional[int] = None, line: Optional[int] = None
    ):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        elif line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class PreconditionError(LabError, ValueError):
    """Raised when an operation is called outside its documented domain."""


class UnsupportedSizeError(LabError):
    """Raised when an exact solver is asked to work past its size budget."""

    exit_code = EXIT_BUDGET

    def __init__(self, operation: str, size: int, limit: int):
        super().__init__(
            f"{operation}: size {size} exceeds the supported limit of {limit}"
        )
        self.operation = operation
        self.size = size
        self.limit = limit
