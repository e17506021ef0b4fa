"""Exception types shared across the package."""


class SimplicialError(ValueError):
    """Base class for domain errors (bad input, unsupported object)."""


class VoidComplexError(SimplicialError):
    """Raised when an operation is undefined on the void complex.

    The void complex has no faces at all; its Stanley-Reisner ideal is the
    unit ideal, so it has no f-vector, no chain complex and no dimension.
    """


class NotAFaceError(SimplicialError):
    pass


class ParseError(SimplicialError):
    """Malformed input document; ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotFoundError(SimplicialError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else "not found"
