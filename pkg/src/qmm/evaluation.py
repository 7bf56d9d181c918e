"""RMSE metrics and the fit report."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .dataset import MeasurementSeries
from .errors import QMMError
from .linalg import SolveDiagnostics
from .models import CalibratedModel, transform_ordinate
from .normalization import NormalizationDescriptor

__all__ = ["FitReport", "rmse", "improvement_percent", "build_report"]


def rmse(predicted, measured) -> float:
    """Root mean square of ``predicted - measured``."""
    a = np.asarray(predicted, dtype=float).ravel()
    b = np.asarray(measured, dtype=float).ravel()
    if a.shape != b.shape:
        raise QMMError(f"length mismatch: {a.size} predicted vs {b.size} measured")
    if a.size == 0:
        raise QMMError("rmse of an empty vector")
    d = a - b
    return math.sqrt(float(np.dot(d, d)) / d.size)


def improvement_percent(rmse_new: float, rmse_ref: float) -> float:
    """Relative RMSE reduction in percent; negative when ``rmse_new`` is worse."""
    if not rmse_ref > 0:
        raise QMMError(f"reference RMSE must be > 0, got {rmse_ref!r}")
    return min((1.0 - rmse_new / rmse_ref) * 100.0, 100.0)


@dataclass(frozen=True)
class FitReport:
    model: CalibratedModel
    rmse_base_db: float
    rmse_qmm_db: float
    rmse_transformed_base: float
    rmse_transformed_qmm: float
    improvement_percent: float | None
    diagnostics: SolveDiagnostics
    normalization: NormalizationDescriptor | None
    n_samples: int = 0
    label: str = ""


def build_report(
    model: CalibratedModel,
    series: MeasurementSeries,
    diagnostics: SolveDiagnostics,
    normalization: NormalizationDescriptor | None = None,
) -> FitReport:
    """
    Score ``model`` and its base model (all coefficients one) on ``series``.

    ``series`` carries raw abscissas; any normalisation attached to the
    model is applied on the way in.  dB-space RMSEs are the headline
    figures.  Only the transformed-space pair is guaranteed to favour the
    fitted model, since that is the space the fit minimises in.
    """
    if normalization is None:
        normalization = model.normalization
    base = CalibratedModel.neutral(model.spec, model.normalization)
    x, y = series.abscissa, series.ordinate

    rmse_base = rmse(base(x), y)
    rmse_qmm = rmse(model(x), y)
    t_meas = transform_ordinate(model.spec, y)
    return FitReport(
        model=model,
        rmse_base_db=rmse_base,
        rmse_qmm_db=rmse_qmm,
        rmse_transformed_base=rmse(base.transformed(x), t_meas),
        rmse_transformed_qmm=rmse(model.transformed(x), t_meas),
        improvement_percent=improvement_percent(rmse_qmm, rmse_base) if rmse_base > 0 else None,
        diagnostics=diagnostics,
        normalization=normalization,
        n_samples=len(series),
        label=series.label,
    )
