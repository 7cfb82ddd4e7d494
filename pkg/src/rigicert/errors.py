"""Exception hierarchy shared by all rigicert modules."""


class RigicertError(Exception):
    """Base class for all errors raised by this package."""


class InputError(RigicertError):
    """A precondition on an operation's input was violated."""


class ParseError(RigicertError):
    """Malformed graph text; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedSizeError(InputError):
    """Graph exceeds the desk-scale vertex bound of an operation."""


class UnsupportedTopologyError(InputError):
    """Graph shape falls outside what an operation can eliminate or solve."""


class DegenerateInputError(InputError):
    """Algebraic degeneracy: a resultant vanished or lost its variable."""


class NotQuadraticallyConstructibleError(InputError):
    """No sequential two-circle construction order exists for the graph."""


class UnrealizableDistancesError(InputError):
    """Every construction branch died on a negative discriminant."""


class InternalInvariantError(RigicertError):
    """A mathematically guaranteed runtime invariant failed; indicates a bug
    or a misuse outside the supported input class, never a user input error."""
