"""Exception hierarchy shared by every ringlab module."""


class RingLabError(Exception):
    """Base class for all ringlab errors."""


class TableShapeError(RingLabError, ValueError):
    """Operation tables are not k x k or contain out-of-range indices."""


class NotAGroup(RingLabError):
    pass


class NotAssociative(RingLabError):
    pass


class NotDistributive(RingLabError):
    pass


class NoUnity(RingLabError):
    pass


class NonUnitalUnsupported(RingLabError):
    pass


class MixedUnitality(RingLabError):
    pass


class OrderTooLarge(RingLabError):
    pass


class ParseError(RingLabError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RingMismatch(RingLabError):
    pass


class ZeroPolynomial(RingLabError, ValueError):
    pass


class ProductNotZero(RingLabError):
    pass


class NotSemicommutative(RingLabError):
    pass


class NotDuo(RingLabError):
    pass


class NotRightDuo(NotDuo):
    pass


class NotLeftDuo(NotDuo):
    pass


class WitnessNotFound(RingLabError):
    pass


class NonterminationGuard(RingLabError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class AnnihilationFailure(RingLabError):
    """A formula that should annihilate did not; carries the offending data."""
