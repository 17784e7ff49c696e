"""Exception types shared across the package."""


class FrobkitError(Exception):
    """Base class for all frobkit errors."""


class InvalidInputError(FrobkitError):
    """Arguments violate a precondition (bad range, empty list, c = 0, ...)."""


class GcdNotOneError(InvalidInputError):
    """Generator set has gcd != 1 and does not define a numerical semigroup."""


class ResourceLimitError(FrobkitError):
    """A dynamic-programming table would exceed the configured entry cap."""


class OutOfValidityRangeError(FrobkitError):
    """p lies outside the range where the closed form is known to hold."""


class NoClosedFormCaseError(FrobkitError):
    """No closed-form case condition applies; callers should use an oracle."""


class UnsupportedCaseError(FrobkitError):
    """No closed form exists for this input family (oracle only)."""
