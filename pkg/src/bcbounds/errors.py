"""Exception types raised across the package."""


class BicomplexError(Exception):
    """Base class for all package errors."""


class ZeroDivisorError(BicomplexError, ZeroDivisionError):
    """Inverting zero or a zero divisor (one idempotent component vanishes)."""


class NonInvertibleLeading(BicomplexError, ValueError):
    """Leading coefficient is zero or a zero divisor."""


class ZeroDegree(BicomplexError, ValueError):
    pass


class NotMonic(BicomplexError, ValueError):
    pass


class ShapeError(BicomplexError, ValueError):
    pass


class SizeLimitExceeded(BicomplexError, ValueError):
    pass


class NoConvergence(BicomplexError, RuntimeError):
    pass


class InvalidSignPattern(BicomplexError, ValueError):
    pass


class DegenerateAllZero(BicomplexError, ValueError):
    """Majorant polynomial has no negative coefficient; its positive zero is taken as 0."""


class BadParameter(BicomplexError, ValueError):
    """Invalid auxiliary input to a bound (r, t, weights)."""


class ComponentDegenerate(BicomplexError, ValueError):
    """A component polynomial is identically zero or constant."""
