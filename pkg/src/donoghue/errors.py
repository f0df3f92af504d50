"""Exception and warning types raised across the package.

Every domain failure derives from :class:`DonoghueError`, itself a
``ValueError``, so callers can catch the whole family at once.
"""


class DonoghueError(ValueError):
    """Base class for domain errors."""


class EmptyMeasure(DonoghueError):
    pass


class RealAxisEvaluation(DonoghueError):
    pass


class PoleAtCayleyCenter(DonoghueError):
    pass


class MoebiusPole(DonoghueError):
    pass


class NotCentered(DonoghueError):
    """Re f(i) is not zero, i.e. the measure carries a shift Q != 0."""


class NotHerglotz(DonoghueError):
    pass


class NotDonoghueNormalized(DonoghueError):
    """Norming constant differs from 1 where a Donoghue-class function is required."""


class DegenerateDeficiencyPairing(DonoghueError):
    pass


class DimensionMismatch(DonoghueError):
    pass


class NotUnimodular(DonoghueError):
    pass


class ParameterOutOfRange(DonoghueError):
    pass


class UnsupportedCombination(DonoghueError):
    pass


class DegeneratePoint(DonoghueError):
    pass


class UnknownClosedForm(DonoghueError):
    pass


class ConditioningWarning(UserWarning):
    """Emitted when 1 - kappa**2 is small enough to cost significant digits."""
