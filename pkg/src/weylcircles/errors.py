"""Exception types raised by the library.

The CLI reports failures by class name, so the names are part of the
public interface.
"""


class WeylError(Exception):
    """Base class for all library errors."""


class NonFiniteInput(WeylError, ValueError):
    pass


class EmptySequence(WeylError, ValueError):
    pass


class OverflowRisk(WeylError, OverflowError):
    pass


class DegreeExceedsMoments(WeylError, ValueError):
    pass


class InsufficientMoments(WeylError, ValueError):
    pass


class NotPositiveDefinite(WeylError, ValueError):
    def __init__(self, order, message=None):
        self.order = order
        super().__init__(message or f"Hankel matrix not positive definite at order {order}")


class IllConditioned(WeylError, ValueError):
    pass


class IndexOutOfRange(WeylError, IndexError):
    pass


class PoleAtZ(WeylError, ZeroDivisionError):
    pass


class PoleAtA(WeylError, ZeroDivisionError):
    pass


class PoleAtAtom(WeylError, ZeroDivisionError):
    pass


class DegenerateMap(WeylError, ValueError):
    pass


class CollinearPoints(WeylError, ValueError):
    pass


class RealAxisZ(WeylError, ValueError):
    pass


class NotCertified(WeylError, ValueError):
    pass


class BadInterval(WeylError, ValueError):
    pass


class OverlappingGaps(WeylError, ValueError):
    pass


class RootFindingFailed(WeylError, ArithmeticError):
    pass
