"""Exception hierarchy shared across the toolkit."""


class StaError(Exception):
    """Base class for all toolkit errors."""


class InputShapeError(StaError):
    """A vector or matrix has the wrong dimensions."""


class InvalidInputError(StaError):
    """Input contains NaN/inf or values outside the documented domain."""


class ModelFormatError(StaError):
    """A model document violates the schema or the ensemble invariants.

    ``location`` is a JSON-path-style string pointing at the offending field.
    """

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


class ConfigError(StaError):
    """Inconsistent or out-of-range configuration."""


class DataError(StaError):
    """Dataset file cannot be parsed or fails validation."""


class NumericFailureError(StaError):
    """An iterate became non-finite; the attack aborted rather than emit NaNs."""


class BoxViolationError(StaError):
    """An attack queried a candidate outside its quantile perturbation budget."""
