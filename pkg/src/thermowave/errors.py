"""Exception types raised by the thermowave package."""


class ThermowaveError(Exception):
    """Base class for all package errors."""


class FormatError(ThermowaveError):
    """A file does not conform to the expected container format."""


class TruncationError(ThermowaveError):
    """A payload is shorter (or longer) than its header declares."""


class DataError(ThermowaveError):
    """Data values violate an invariant (non-finite, wrong shape, ...)."""


class IoError(ThermowaveError):
    """An underlying I/O operation failed."""


class BoundsError(ThermowaveError):
    """A window or index falls outside the frame."""


class ConfigError(ThermowaveError):
    """A configuration value is invalid."""


class CatalogError(ThermowaveError):
    """An unknown wavelet basis was requested."""


class LevelError(ThermowaveError):
    """A decomposition level is out of range for the frame/basis pair."""


class ShapeError(ThermowaveError):
    """Two arrays that must share a shape do not."""


class DegenerateError(ThermowaveError):
    """A quantity that must be nonzero (background power, cost denominator)
    vanished."""


class SelectionError(ThermowaveError):
    """No admissible candidate survived a selection sweep."""
