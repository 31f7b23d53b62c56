"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FlasqueLabError(Exception):
    """Base class for all library errors."""


class InputError(FlasqueLabError, ValueError):
    """Malformed input: bad dimensions, non-bijective permutations, parse errors."""


class SizeError(InputError):
    """A configured size cap was exceeded."""


class PreconditionError(FlasqueLabError, ValueError):
    """A mathematical precondition was violated (non-equivariant map, non-pure
    sublattice, non-surjective presentation, ...)."""


class ConsistencyError(FlasqueLabError, RuntimeError):
    """An internal certificate failed.  This is a defect, not a user error."""


class ProblemFileError(InputError):
    """Problem-file parse or validation error, with a source location."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
