"""Shared exception types.

The CLI maps these onto exit codes: configuration problems are usage
errors (exit 1), parse/integrity problems are data errors (exit 2).
"""


class StreamRankError(Exception):
    pass


class ParseError(StreamRankError):
    """Malformed input line; carries a 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class ConfigError(StreamRankError):
    """Unsatisfiable or inconsistent configuration."""


class IntegrityError(StreamRankError):
    """Inputs violate a cross-structure contract (e.g. missing scores)."""
