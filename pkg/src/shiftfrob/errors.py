class ShiftFrobError(Exception):
    """Base class for all library errors."""


class DomainError(ShiftFrobError, ValueError):
    """Input outside the mathematical domain of an operation."""


class CapacityError(ShiftFrobError):
    """Input exceeds a configured computational cap."""


class HypothesisFailure(ShiftFrobError):
    """No r satisfies the max-r conditions, so that characterization does not apply."""

    def __init__(self, a: int):
        super().__init__(f"no r in [1, {a - 1}] satisfies the max-r conditions for a={a}")
        self.a = a
