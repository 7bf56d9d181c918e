"""End-to-end fit: validate, normalise, transform, assemble, solve, report."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .dataset import MeasurementSeries, SeriesKind, validate_series
from .errors import DataError
from .evaluation import FitReport, build_report
from .linalg import DesignSamples, FitOptions, gram_matrix, moment_vector, solve_coefficients
from .models import ANCHOR_PARAM, CalibratedModel, ModelSpec, transform_ordinate
from .normalization import ANCHOR_PERCENT, apply_normalization

__all__ = ["Normalize", "FitRequest", "fit", "predict_series", "resolve_normalize"]


class Normalize(str, Enum):
    AUTO = "auto"
    ON = "on"
    OFF = "off"


@dataclass(frozen=True)
class FitRequest:
    spec: ModelSpec
    series: MeasurementSeries
    options: FitOptions = field(default_factory=FitOptions)
    normalize: Normalize = Normalize.AUTO

    def __post_init__(self):
        object.__setattr__(self, "normalize", Normalize(self.normalize))


def resolve_normalize(mode, series: MeasurementSeries) -> bool:
    mode = Normalize(mode)
    if mode is Normalize.AUTO:
        return (
            series.kind is SeriesKind.EXCEEDANCE_PERCENT
            and float(series.abscissa.min()) < ANCHOR_PERCENT
        )
    return mode is Normalize.ON


def fit(request: FitRequest) -> tuple[CalibratedModel, FitReport]:
    """
    Calibrate ``request.spec`` against ``request.series``.

    With normalisation on, percentages are scaled so the smallest becomes
    0.01 % and the family's A0.01 parameter is replaced by the attenuation
    measured at that smallest percentage.
    """
    spec, series = request.spec, request.series
    errors = [f.message for f in validate_series(series) if f.is_error]
    if errors:
        raise DataError("; ".join(errors))
    if series.kind.value != spec.kind:
        raise DataError(f"{spec.family} expects a {spec.kind} series, got {series.kind.value}")

    desc = None
    x = series.abscissa
    if resolve_normalize(request.normalize, series):
        if series.kind is not SeriesKind.EXCEEDANCE_PERCENT:
            raise DataError("normalisation requires an exceedance-percentage series")
        scaled, desc = apply_normalization(series)
        x = scaled.abscissa
        anchor = ANCHOR_PARAM.get(spec.family)
        if anchor is not None:
            spec = spec.replace(**{anchor: desc.a001_equivalent})

    samples = DesignSamples(spec.basis(x), transform_ordinate(spec, series.ordinate))
    G = gram_matrix(samples, request.options)
    b = moment_vector(samples, request.options)
    c, diag = solve_coefficients(G, b, request.options)

    model = CalibratedModel(spec, c, desc)
    return model, build_report(model, series, diag)


def predict_series(model: CalibratedModel, abscissas) -> np.ndarray:
    x = np.asarray(abscissas, dtype=float).ravel()
    if x.size == 0:
        return np.empty(0)
    return np.atleast_1d(model(x))
