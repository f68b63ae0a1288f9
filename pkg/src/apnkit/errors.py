"""Exception hierarchy shared by every apnkit module."""


class ApnKitError(Exception):
    """Base class for all apnkit errors."""


class ParameterError(ApnKitError, ValueError):
    """An argument violates an operation's precondition."""


class NoSolutionError(ParameterError):
    """A parameter choice admits no integral exponent."""


class NotInvertibleError(ApnKitError, ArithmeticError):
    """Modular inverse requested for a non-unit."""


class ResourceError(ApnKitError, RuntimeError):
    """A desk-scale size guard was exceeded."""


class InvariantError(ApnKitError, RuntimeError):
    """An internal identity that must hold did not."""
