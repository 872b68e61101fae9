"""Domain errors shared across the package.

Every error maps to a stable, machine-parsable name: the CLI prints
``<ClassName>: <message>`` on one line and exits with code 2.
"""

from __future__ import annotations


class OutOfRange(ValueError):
    """A rational argument lies outside the unit interval [0, 1]."""


class DisjointnessViolation(ValueError):
    """Strict disjoint union received sets that share labels."""

    def __init__(self, common: tuple[str, ...]):
        self.common = tuple(common)
        super().__init__(f"sets share labels: {', '.join(self.common)}")


class DomainViolation(ValueError):
    """A stream was passed to a map whose domain excludes it."""


class ParseError(ValueError):
    """Malformed literal. ``position`` is the offset of the failure."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured item budget."""
