"""Shared exception types."""


class MatchlogError(Exception):
    pass


class SideConditionError(MatchlogError):
    """A construction's stated precondition does not hold (free-for,
    occurrence, distinctness, gen-discipline...). Carries a machine-readable
    cause tag."""

    def __init__(self, cause: str, message: str):
        super().__init__(message)
        self.cause = cause
        self.message = message
