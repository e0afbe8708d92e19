"""Exception types shared across the package."""


class ApollonianError(Exception):
    """Base class for all errors raised by this package."""


class OutsideDiscError(ApollonianError, ValueError):
    """A point violates the open-disc constraint |x| < 1."""


class DegenerateInputError(ApollonianError, ValueError):
    """An operation that needs two distinct points received equal ones."""


class ZeroTangentError(ApollonianError, ValueError):
    """A tangent-space operation received the zero vector."""


class NonSpacelikeError(ApollonianError, ValueError):
    """The Lorentz quadratic form is negative on the given 3-vector."""


class DegenerateNavigationError(ApollonianError, ValueError):
    """Zermelo reconstruction with wind of norm >= 1."""
