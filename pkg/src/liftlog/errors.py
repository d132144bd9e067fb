"""Exception hierarchy shared by all liftlog modules."""


class LiftlogError(Exception):
    """Base class for every error raised by the toolkit."""


class DimensionMismatch(LiftlogError, ValueError):
    pass


class ZeroIdealError(LiftlogError, ValueError):
    pass


class UnitIdealError(LiftlogError, ValueError):
    pass


class NoStabilization(LiftlogError):
    """Colon iteration did not stabilize before the iteration cap.

    The closure exists; raise ``n_max`` and retry.
    """

    def __init__(self, n_max, last=None):
        super().__init__(f"quotients did not stabilize within n_max={n_max}")
        self.n_max = n_max
        self.last = last


class NotMPrimary(LiftlogError, ValueError):
    pass


class NotTwoVariables(LiftlogError, ValueError):
    pass


class ZeroWeight(LiftlogError, ValueError):
    pass


class SingularExponentMatrix(LiftlogError, ValueError):
    pass


class NotLiftable(LiftlogError, ValueError):
    pass


class DegreeCapExceeded(LiftlogError):
    """A degree box grew past LIFTLOG_MAX_DEGREE."""


class ParseError(LiftlogError, ValueError):
    """Text input rejected; carries 1-based line and column."""

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.column = col


class IdealSyntaxError(ParseError):
    pass


class UnknownVariable(ParseError):
    pass


class NegativeExponent(ParseError):
    pass
