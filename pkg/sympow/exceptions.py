# sympow/exceptions.py
"""
Exception hierarchy for sympow.
"""

from typing import Optional


class SympowError(Exception):
    """Base exception for all sympow errors."""
    pass


class ParseError(SympowError):
    """Ring or polynomial text that does not match the grammar."""

    def __init__(
        self,
        message: str,
        position: Optional[int] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.message = message
        self.position = position
        self.line = line
        self.column = column
        super().__init__(self._render())

    def _render(self) -> str:
        if self.line is not None:
            return f"{self.message} (line {self.line}, column {self.column})"
        if self.position is not None:
            return f"{self.message} (at position {self.position})"
        return self.message

    def located(self, line: int, column_offset: int) -> "ParseError":
        """Re-anchor a position-only error inside a multi-line document."""
        column = column_offset + (self.position or 0) + 1
        return ParseError(self.message, self.position, line=line, column=column)


class RingError(SympowError):
    """Invalid ring descriptor."""
    pass


class RingMismatchError(RingError):
    """Operands live in different rings."""
    pass


class GuardAbort(SympowError):
    """A resource guard stopped a computation."""

    def __init__(self, guard: str, limit, observed, context: str = ""):
        self.guard = guard
        self.limit = limit
        self.observed = observed
        self.context = context
        where = f" during {context}" if context else ""
        super().__init__(f"{guard} guard exceeded{where}: {observed} > {limit}")


class StrategyError(SympowError):
    """Symbolic-power strategy errors."""
    pass


class PreconditionError(SympowError, ValueError):
    """An operation was called outside its domain."""
    pass


class ScenarioError(SympowError):
    """Scenario files that are syntactically fine but ill-formed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"{message}{where}")
