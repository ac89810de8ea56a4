"""Exception hierarchy shared by every module of the package."""


class IterantError(Exception):
    """Base class for all errors raised by this package."""


class MalformedScalarError(IterantError, ValueError):
    pass


class SpecializationError(IterantError, ValueError):
    pass


class MissingRootError(IterantError, ValueError):
    """A construction needs a root of unity absent from the scalar order."""


class GroupError(IterantError, ValueError):
    pass


class DegreeMismatchError(GroupError):
    pass


class GroupMismatchError(IterantError, ValueError):
    pass


class DecompositionError(IterantError, ValueError):
    def __init__(self, message, uncovered=(), overlapping=()):
        super().__init__(message)
        self.uncovered = tuple(uncovered)
        self.overlapping = tuple(overlapping)


class NotClosedError(IterantError, ArithmeticError):
    pass


class StrandMismatchError(IterantError, ValueError):
    pass


class UnknownParticleError(IterantError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(IterantError, ValueError):
    """Syntax error carrying a 1-based line/column and the expected tokens."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f"{message} at line {line}, column {column}"
        if self.expected:
            detail += " (expected one of: " + ", ".join(self.expected) + ")"
        super().__init__(detail)
        self.message = message


class EvalError(IterantError, ValueError):
    pass


class UnboundNameError(EvalError):
    pass
