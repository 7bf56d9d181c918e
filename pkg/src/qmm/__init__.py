"""Quasi-Moment-Method calibration of rain-attenuation prediction models."""

from .dataset import (
    Finding,
    MeasurementSeries,
    SeriesKind,
    parse_measurement_csv,
    read_measurement_csv,
    serialize_measurement_csv,
    validate_series,
)
from .errors import ConfigError, DataError, DomainError, QMMError, SolverError
from .evaluation import FitReport, build_report, improvement_percent, rmse
from .linalg import (
    DesignSamples,
    FitOptions,
    SolveDiagnostics,
    gram_matrix,
    moment_vector,
    solve_coefficients,
)
from .models import (
    FAMILIES,
    CalibratedModel,
    ChineseCdf,
    ItuCdf,
    LogLinear,
    ModelSpec,
    PowerLaw,
    Transform,
    YeoCdf,
    base_prediction,
    basis_eval,
    predict,
    transform_ordinate,
)
from .normalization import (
    NormalizationDescriptor,
    apply_normalization,
    denormalize_percentage,
    normalization_scale,
)
from .pipeline import FitRequest, Normalize, fit, predict_series

__version__ = "0.1.0"

__all__ = [
    "CalibratedModel", "ChineseCdf", "ConfigError", "DataError", "DesignSamples",
    "DomainError", "FAMILIES", "Finding", "FitOptions", "FitReport", "FitRequest",
    "ItuCdf", "LogLinear", "MeasurementSeries", "ModelSpec", "NormalizationDescriptor",
    "Normalize", "PowerLaw", "QMMError", "SeriesKind", "SolveDiagnostics", "SolverError",
    "Transform", "YeoCdf", "apply_normalization", "base_prediction", "basis_eval",
    "build_report", "denormalize_percentage", "fit", "gram_matrix", "improvement_percent",
    "moment_vector", "normalization_scale", "parse_measurement_csv", "predict",
    "predict_series", "read_measurement_csv", "rmse", "serialize_measurement_csv",
    "solve_coefficients", "transform_ordinate", "validate_series",
]
