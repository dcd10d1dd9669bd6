"""Shared exception types."""


class ScaleGuardError(RuntimeError):
    """An enumeration was refused because the search space exceeds the desk-scale guard."""

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(f"{what}: size {size} exceeds guard {limit}")
        self.what = what
        self.size = size
        self.limit = limit


class ConstructionError(RuntimeError):
    """A randomized builder exhausted its retry budget or got unusable ingredients."""


class ValidationError(ValueError):
    """A config or CLI input failed validation; the message names the offending field."""
