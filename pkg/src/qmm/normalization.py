"""
Exceedance-percentage normalisation.

CDF base models extrapolate from the attenuation exceeded for 0.01 % of the
time.  When the measured percentages sit below that anchor (e.g. 1e-5 % to
1e-3 %), every percentage is multiplied by ``s = 0.01 / p_min`` so the
smallest one lands on 0.01 %, and the attenuation measured there becomes the
*equivalent* A0.01.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .dataset import MeasurementSeries, SeriesKind
from .errors import DataError

__all__ = [
    "ANCHOR_PERCENT",
    "NormalizationDescriptor",
    "normalization_scale",
    "apply_normalization",
    "denormalize_percentage",
]

log = logging.getLogger(__name__)

ANCHOR_PERCENT = 0.01
_SNAP_RTOL = 1e-12


@dataclass(frozen=True)
class NormalizationDescriptor:
    scale: float
    a001_equivalent: float
    original_range: tuple[float, float]
    normalized_range: tuple[float, float]

    def to_dict(self) -> dict:
        return {
            "scale": self.scale,
            "a001_equivalent": self.a001_equivalent,
            "original_range": list(self.original_range),
            "normalized_range": list(self.normalized_range),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NormalizationDescriptor":
        return cls(
            scale=float(d["scale"]),
            a001_equivalent=float(d["a001_equivalent"]),
            original_range=tuple(float(v) for v in d["original_range"]),
            normalized_range=tuple(float(v) for v in d["normalized_range"]),
        )


def _snap_power_of_ten(s: float) -> float:
    # 0.01 / 1e-5 evaluates to 999.9999999999999; report the exact power of ten
    k = round(math.log10(s))
    p = 10.0 ** k
    return p if abs(s - p) <= _SNAP_RTOL * p else s


def normalization_scale(p_values) -> float:
    """``s = 0.01 / min(p)``, snapped to a power of ten when within 1e-12 of one."""
    p = np.asarray(p_values, dtype=float).ravel()
    if p.size == 0:
        raise DataError("cannot normalise an empty set of percentages")
    if not np.all(np.isfinite(p)) or np.any(p <= 0):
        raise DataError("exceedance percentages must be finite and > 0")
    return _snap_power_of_ten(ANCHOR_PERCENT / float(p.min()))


def apply_normalization(series: MeasurementSeries):
    """
    Scale a CDF series so its smallest percentage becomes 0.01 %.

    Returns the scaled series (ordinates untouched) and the descriptor whose
    ``a001_equivalent`` is the attenuation measured at the smallest
    percentage (the largest one if that percentage is repeated).
    """
    if series.kind is not SeriesKind.EXCEEDANCE_PERCENT:
        raise DataError(f"normalisation applies to exceedance-percentage series, not {series.kind.value}")
    p = series.abscissa
    s = normalization_scale(p)
    p_min, p_max = float(p.min()), float(p.max())
    a_eq = float(series.ordinate[p == p_min].max())

    if s < 1:
        log.warning("smallest percentage %g %% is above 0.01 %%; scaling down by %g", p_min, s)
    if s * p_max > 1:
        log.warning("normalised percentages reach %g %%, beyond the usual 1 %% limit", s * p_max)

    desc = NormalizationDescriptor(
        scale=s,
        a001_equivalent=a_eq,
        original_range=(p_min, p_max),
        normalized_range=(s * p_min, s * p_max),
    )
    order = np.argsort(p, kind="stable")
    scaled = MeasurementSeries(series.kind, p[order] * s, series.ordinate[order], series.label)
    return scaled, desc


def denormalize_percentage(p_n, desc: NormalizationDescriptor):
    p_n = np.asarray(p_n, dtype=float)
    if np.any(~(p_n > 0)):
        raise DataError("normalised percentage must be > 0")
    out = p_n / desc.scale
    return float(out) if out.ndim == 0 else out
