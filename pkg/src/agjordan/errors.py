"""Exception types shared across the package."""


class DomainError(ValueError):
    """Invalid input: bad syntax, wrong shape, out-of-range argument."""


class ParseError(DomainError):
    """Syntax error in a polynomial or linear-form expression."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class NotRealizableError(DomainError):
    """Input data cannot come from any algebra of the required kind."""


class InternalInconsistencyError(RuntimeError):
    """A mathematical invariant failed on a genuine computation; a bug."""
