class TropenumError(Exception):
    """Base class for all validation errors raised by the package."""

    reason = "error"


class InvalidDivisorError(TropenumError, ValueError):
    reason = "invalid-divisor"


class OrderValidationError(TropenumError, ValueError):
    reason = "invalid-order"


class NotInjectiveError(OrderValidationError):
    reason = "not-injective"


class WrongExtremesError(OrderValidationError):
    reason = "wrong-extremes"


class GenusOutOfRangeError(TropenumError, ValueError):
    reason = "genus-out-of-range"


class WelschingerNonInvariantError(TropenumError):
    reason = "welschinger-noninvariant"


class HypothesesViolatedError(TropenumError, ValueError):
    reason = "hypotheses-violated"


class DegenerateSupportError(TropenumError, ValueError):
    reason = "degenerate-support"
