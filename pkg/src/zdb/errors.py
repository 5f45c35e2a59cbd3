"""Exception types raised across the package.

Precondition failures raise; verification outcomes (a table that is not ZDB,
an inapplicable bound) are returned as values instead.
"""


class ZdbError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePower(ZdbError, ValueError):
    pass


class NotPrime(ZdbError, ValueError):
    pass


class DivisionByZero(ZdbError, ZeroDivisionError):
    pass


class NotInvertible(ZdbError, ValueError):
    pass


class CyclicGroupHasNoSupport(ZdbError, TypeError):
    pass


class EmptySupport(ZdbError, ValueError):
    pass


class DuplicateFieldOrder(ZdbError, ValueError):
    pass


class RepeatedPrime(ZdbError, ValueError):
    """Two field orders share a characteristic and the override was not given."""


class NotABijection(ZdbError, ValueError):
    pass


class BadExponent(ZdbError, ValueError):
    pass


class EvenPrimeNotAllowed(ZdbError, ValueError):
    pass


class CompositionMismatch(ZdbError, ValueError):
    pass


class DegenerateDss(ZdbError, ValueError):
    pass


class NonCyclicGroup(ZdbError, ValueError):
    pass


class OverlappingSets(ZdbError, ValueError):
    pass


class ArtifactFormatError(ZdbError, ValueError):
    """Raised when an artifact file cannot be parsed."""
