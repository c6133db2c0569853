"""Exception types shared by the library and the command line."""
from typing import Optional


class FrobeniusError(Exception):
    """Base class for every error the toolkit raises on purpose."""

    kind = "error"


class PreconditionError(FrobeniusError, ValueError):
    """An operation was called outside its domain."""

    kind = "precondition"


class ActionValidationError(FrobeniusError, ValueError):
    """Generator images do not satisfy the Coxeter relations of S_n."""

    kind = "validation"

    def __init__(self, relation: str, message: Optional[str] = None):
        self.relation = relation
        super().__init__(message or f"relation {relation} violated")


class ResourceGuardError(FrobeniusError, ValueError):
    """Refusal to run a computation above a configured guard."""

    kind = "guard"

    def __init__(self, guard: str, limit: int, requested: int):
        self.guard = guard
        self.limit = limit
        self.requested = requested
        super().__init__(f"{guard}={limit} refuses {requested}")


class ConsistencyError(FrobeniusError, RuntimeError):
    """Exact arithmetic produced something that can only be a bug."""

    kind = "consistency"


class InputFormatError(FrobeniusError, ValueError):
    """JSON input could not be read."""

    kind = "parse"
