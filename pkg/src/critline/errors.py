"""Exception hierarchy shared by every critline module."""


class CritlineError(Exception):
    """Base class for all critline errors."""


class DomainError(CritlineError, ValueError):
    """An argument lies outside the domain of the function."""


class NumericalError(CritlineError, ArithmeticError):
    """A numerical procedure could not deliver the requested result."""


class ConvergenceError(NumericalError):
    """An iteration hit its cap before meeting its tolerance."""


class AccuracyError(NumericalError):
    """The truncation budget cannot meet the requested accuracy."""


class BracketError(NumericalError):
    """A root bracket does not enclose a sign change."""


class MissedZeroError(NumericalError):
    """Zero scanning disagrees with the zero-counting function."""


class AtZeroError(DomainError):
    """The principal argument is undefined because zeta vanishes here.

    Use :func:`critline.zline.s_arg_at_zero` instead.
    """
