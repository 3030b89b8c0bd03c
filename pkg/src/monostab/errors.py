"""Exception types shared across the package.

The CLI maps these onto exit codes: usage errors exit 2, resource
limits exit 3.
"""


class UsageError(ValueError):
    """Invalid input for an operation (mixed rings, zero ideal, ...)."""


class ParseError(UsageError):
    """Malformed ideal text. Carries 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class ResourceLimitError(RuntimeError):
    """A configured size guard was exceeded.

    ``power`` is filled in by the stability layer so a report can say
    which power of the ideal hit the limit.
    """

    def __init__(self, message, limit=None, power=None):
        self.limit = limit
        self.power = power
        super().__init__(message)

    def at_power(self, n):
        err = ResourceLimitError(f"power {n}: {self.args[0]}", self.limit, n)
        err.__cause__ = self
        return err


class ExponentOverflowError(ArithmeticError):
    """An exponent left the signed 64-bit range."""
