"""Exception types shared across the package."""


class BellboundError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(BellboundError, ValueError):
    """An argument is outside its documented domain."""


class DimensionError(BellboundError, ValueError):
    """Shapes or index ranges of the inputs do not line up."""


class ResourceLimitError(BellboundError, RuntimeError):
    """An enumeration or construction would exceed the configured guard."""


class ConvergenceError(BellboundError, RuntimeError):
    """An iterative routine hit its cap without reaching tolerance."""
