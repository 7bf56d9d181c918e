"""Exception types raised across the package."""


class QMMError(ValueError):
    """Base class for every error raised by :mod:`qmm`."""


class DomainError(QMMError):
    """An abscissa or ordinate lies outside the domain of a logarithm."""


class DataError(QMMError):
    """Malformed or invalid measurement data."""


class SolverError(QMMError):
    """The Gram system could not be solved."""


class ConfigError(QMMError):
    """Malformed run configuration or model file."""
