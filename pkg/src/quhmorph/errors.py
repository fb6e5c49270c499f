class QuhmorphError(ValueError):
    """Base class for every error raised by this package."""


class ParameterError(QuhmorphError):
    pass


class DimensionError(QuhmorphError):
    pass


class ValidationError(QuhmorphError):
    pass


class FormatError(QuhmorphError):
    """Malformed PM or QUH text."""
