"""Exception hierarchy.

Every error raised by this package derives from SkewRingError so callers can
catch broadly; the CLI maps SkewRingError to exit status 2 (usage/parse) or 1
(verification) depending on where it surfaces.
"""


class SkewRingError(Exception):
    pass


# -- field construction / arithmetic --

class NotPrimeError(SkewRingError):
    pass


class NotIrreducibleError(SkewRingError):
    pass


class DegreeMismatchError(SkewRingError):
    pass


class FieldTooLargeError(SkewRingError):
    """Dense arithmetic tables are only built for moderate field sizes."""


class ParseError(SkewRingError):
    """Malformed text input (field element, matrix, context file...)."""


# -- groups --

class InvalidActionError(SkewRingError):
    """Semidirect-product action exponent does not define an automorphism."""


class NotAGroupError(SkewRingError):
    pass


# -- cocycles / theta --

class ZeroLambdaError(SkewRingError):
    pass


class CocycleInvalidError(SkewRingError):
    """Table fails normalization, the cocycle identity, or stabilization."""


class NonCyclicValueGroupError(SkewRingError):
    """Defensive; K* is always cyclic for finite fields."""


# -- ring --

class ContextMismatchError(SkewRingError):
    pass


class ConditionAViolatedError(SkewRingError):
    pass


class ConditionBViolatedError(SkewRingError):
    pass


class ConditionCViolatedError(SkewRingError):
    pass


class NotCyclicError(SkewRingError):
    pass


# -- codes --

class ZeroCodeError(SkewRingError):
    pass


class TooLargeError(SkewRingError):
    """Exhaustive enumeration refused beyond the configured codeword bound."""


class NotSquareFieldError(SkewRingError):
    pass


class HermitianCocycleConditionError(SkewRingError):
    """alpha^q != alpha; the annihilator route for the Hermitian dual needs it."""


class CocycleNotInvolutiveError(SkewRingError):
    """Adjoint-based certificates need alpha = alpha^-1."""


class CharacteristicDividesOrderError(SkewRingError):
    pass


class VerificationFailedError(SkewRingError):
    """Internal postcondition failed; signals an implementation bug."""


class NotIdempotentError(SkewRingError):
    pass


# -- semilinear --

class LengthMismatchError(SkewRingError):
    pass


class SizeCapError(SkewRingError):
    pass


class NotStabilizedError(SkewRingError):
    pass


class ReconstructionError(SkewRingError):
    """Recognition preconditions hold but the recovered (theta, alpha) pair
    does not define a valid stabilized cocycle ring."""


# -- catalog --

class VariantResolutionFailedError(SkewRingError):
    """No construction variant reproduces the published parameters."""
