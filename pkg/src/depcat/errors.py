"""Exception hierarchy.

Law violations are never raised; they are collected into a
:class:`~depcat.report.LawReport`.  Exceptions signal misuse: ill-typed
arguments, missing structure, malformed input.
"""


class DepcatError(Exception):
    """Base class for every error raised by this package."""


class UnknownObject(DepcatError, KeyError):
    pass


class UnknownArrow(DepcatError, KeyError):
    pass


class NotComposable(DepcatError, ValueError):
    pass


class NotACospan(DepcatError, ValueError):
    pass


class IllTypedSquare(DepcatError, ValueError):
    pass


class NonCommutingCone(DepcatError, ValueError):
    pass


class NoTerminalObject(DepcatError, LookupError):
    pass


class TypeMismatch(DepcatError, ValueError):
    pass


class BudgetExceeded(DepcatError, RuntimeError):
    pass


class MissingPullback(DepcatError, LookupError):
    pass


class MissingProduct(DepcatError, LookupError):
    pass


class MissingSigmaObject(DepcatError, LookupError):
    pass


class NoSubobjectClassifier(DepcatError, LookupError):
    pass


class NotARing(DepcatError, ValueError):
    pass


class PullbackMediatorMissing(DepcatError, LookupError):
    pass


class NotEqualElements(DepcatError, ValueError):
    pass


class InvalidSpec(DepcatError, ValueError):
    pass


class LayerMissing(DepcatError, LookupError):
    pass


class ParseError(DepcatError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)


class IntegrityError(DepcatError, ValueError):
    pass
