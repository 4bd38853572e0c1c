"""Exception types shared by the model modules."""


class ModelError(Exception):
    """Base class for computation failures.

    ``operation`` names the routine that failed so sweep rows can report it.
    """

    kind = "error"

    def __init__(self, message: str, operation: str = ""):
        super().__init__(message)
        self.operation = operation

    def describe(self) -> str:
        op = f"{self.operation}: " if self.operation else ""
        return f"{self.kind}: {op}{self}"


class DomainError(ModelError, ValueError):
    kind = "domain"


class NoSignChange(ModelError):
    kind = "no_sign_change"


class MaxIterExceeded(ModelError):
    kind = "max_iter"


class UnstableTrapError(ModelError):
    kind = "unstable"


class SeriesTruncationError(ModelError):
    kind = "series_truncation"
