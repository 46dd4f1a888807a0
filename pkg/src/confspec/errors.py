"""Exception types shared across the package."""


class ConfspecError(Exception):
    """Base class for all package-specific errors."""


class DomainError(ConfspecError):
    """A point lies outside the admissible region of a metric model."""


class MarginError(ConfspecError):
    """A domain approaches the chart's singular set closer than one cell."""


class EmptyGridError(ConfspecError):
    """Grid construction produced no interior nodes (spacing too coarse)."""


class ChartError(ConfspecError):
    """An operation requires a chart the current model does not provide."""


class DimensionError(ConfspecError):
    """Requested more eigenpairs than the discrete problem supports."""


class ConvergenceError(ConfspecError):
    """眼Eigensolver failed to reach the requested residual tolerance."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class ModelMismatchError(ConfspecError):
    """A checker received results computed against an incompatible model."""


class NotApplicableError(ConfspecError):
    """An inequality's parameter predicate rejects the given input."""


class NoRealRootError(ConfspecError):
    """The eigenvalue-bound quadratic has no real root."""


class ConfigError(ConfspecError):
    """Run configuration failed to parse or validate."""

    def __init__(self, message, field=None):
        super().__init__(message if field is None else f"{field}: {message}")
        self.field = field
