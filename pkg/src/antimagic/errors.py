"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed edge-list input; ``line`` is 1-based or None for whole-input errors."""

    def __init__(self, message: str, line: int | None):
        self.line = line
        self.reason = message
        super().__init__(message if line is None else f"line {line}: {message}")


class InvalidTreeError(ValueError):
    pass


class NotACaterpillarError(ValueError):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(f"not a caterpillar: {reason}")


class LabelingError(ValueError):
    """A labeling is not total, out of range, or not injective."""


class InvariantViolation(AssertionError):
    """A property guaranteed by the construction failed at runtime."""


class OracleLimitError(ValueError):
    """The brute-force search was asked for more edges than its limit allows."""


class OracleBudgetExceeded(RuntimeError):
    """The brute-force search ran out of its node-expansion budget."""
