"""Exception types shared across the package."""


class OstrowskiError(Exception):
    """Base class for all package-specific errors."""


class MixedRadicand(OstrowskiError):
    """Arithmetic attempted between two genuinely irrational values from
    different quadratic fields."""


class RationalInput(OstrowskiError):
    """An operation requiring a quadratic irrational received a rational."""


class InvalidDigits(OstrowskiError):
    """A digit string violates the admissibility rules of its system."""


class OutOfRange(OstrowskiError):
    """A real value lies outside the representable base interval."""


class IncomparableSystems(OstrowskiError):
    """Two digit sequences belong to different numeration systems."""


class PredecessorOfZero(OstrowskiError):
    """The minimal element of a well-order has no predecessor."""


class NotAnInteger(OstrowskiError):
    """An identity that must produce an integer failed to; indicates an
    implementation fault, never bad user input."""


class IdentityViolation(OstrowskiError):
    """An exact algebraic identity the construction guarantees was violated."""


class ApproximateResult(OstrowskiError):
    """An exact value was requested from a truncated (approximate) expansion."""


class UnsupportedSystem(OstrowskiError):
    """The operation is only defined for a specific numeration system."""


class AlphabetMismatch(OstrowskiError):
    """Automaton operation on machines with incompatible alphabets."""
