"""Exception types raised by the toolkit."""


class BerryConcurrenceError(ValueError):
    """Base class for all errors raised by this package."""


class DomainError(BerryConcurrenceError):
    """An argument lies outside the domain of the operation."""


class BadDimension(BerryConcurrenceError):
    """An array does not have the dimension the operation needs."""


class NotHermitian(BerryConcurrenceError):
    pass


class NotPSD(BerryConcurrenceError):
    """A matrix has an eigenvalue below the roundoff window."""


class NotNormalized(BerryConcurrenceError):
    pass


class ZeroState(BerryConcurrenceError):
    """All amplitudes vanish, so the state cannot be normalized."""


class ZeroVisibility(BerryConcurrenceError):
    """The overlap modulus vanishes and its phase is undefined."""


class DegeneratePath(BerryConcurrenceError):
    """Two consecutive states on a loop are (numerically) orthogonal."""


class BadSteps(BerryConcurrenceError):
    pass
