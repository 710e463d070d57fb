"""Exception hierarchy shared by every module."""


class StretchFactorError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateInput(StretchFactorError, ValueError):
    pass


class InexactDivision(StretchFactorError, ArithmeticError):
    pass


class OutOfRange(StretchFactorError, ValueError):
    pass


class InconclusiveError(StretchFactorError):
    """An exact decision procedure could not reach a verdict."""


class Disconnected(StretchFactorError, ValueError):
    pass


class NotCoxeter(StretchFactorError, ValueError):
    """A configuration graph would need multiple edges."""


class NotDominant(StretchFactorError, ValueError):
    pass


class NotHyperbolic(StretchFactorError, ValueError):
    pass


class UnknownCurve(StretchFactorError, KeyError):
    pass


class ConventionError(StretchFactorError):
    """A curve-class table failed its calibration against the known polynomial."""


class InputError(StretchFactorError, ValueError):
    """Malformed user input (polynomial text, dataset rows, words)."""
