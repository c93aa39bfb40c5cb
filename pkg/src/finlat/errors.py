"""Exception types shared across the package."""


class FinlatError(Exception):
    """Base class for all package-specific errors."""


class NonPrimeCharacteristic(FinlatError):
    """A field characteristic must be prime."""


# Constructions that take a bare prime report the same failure mode.
NonPrime = NonPrimeCharacteristic


class ReduciblePolynomial(FinlatError):
    """A supplied modulus factors over Z_p."""


class FieldMismatch(FinlatError):
    """Elements of distinct fields met in one operation."""


class ZeroInverse(FinlatError):
    """Zero has no multiplicative inverse."""


class DimensionMismatch(FinlatError):
    """Vector lengths disagree."""


class AmbientMismatch(FinlatError):
    """Subspaces of different ambient spaces were combined."""


class CapExceeded(FinlatError):
    """An enumeration would exceed its configured cap."""


class DomainError(FinlatError):
    """An argument lies outside an operation's domain."""


class NotOrthogonalBasis(FinlatError):
    """A vector family failed the orthogonal-basis test."""


class HypothesisViolated(FinlatError):
    """A construction's arithmetic hypothesis does not hold."""


class OverlapViolation(FinlatError):
    """Glued lattices share elements other than their bounds."""


class NotPrimeField(FinlatError):
    """The operation requires a prime field GF(p)."""
