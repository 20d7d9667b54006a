class TambaraError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(TambaraError, ValueError):
    """Input data fails an axiom; the message names the axiom and a witness."""


class PreconditionError(TambaraError, ValueError):
    pass


class SizeCapError(TambaraError):
    """An enumeration would exceed the configured candidate cap."""


class UnsupportedCarrierError(TambaraError):
    pass


class IntegralityError(AssertionError):
    """A ghost-triangular solve produced a non-integral coefficient."""
