"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid argument values (bad generator params, alpha out of range, ...)."""


class ValidationError(ValueError):
    """Input data violates a structural requirement (self-loop, duplicate edge)."""


class ParseError(ValueError):
    """Malformed input file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IntegrityError(RuntimeError):
    """An attack plan does not match the graph it is applied to."""
