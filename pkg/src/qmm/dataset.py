"""Measurement series and their CSV representation.

Two column vocabularies are recognised, one per series kind::

    exceedance_percent,attenuation_db
    rain_rate_mm_per_h,specific_attenuation_db_per_km
"""

from __future__ import annotations

import csv
import io
import logging
import re
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .errors import DataError

__all__ = [
    "SeriesKind",
    "MeasurementSeries",
    "Finding",
    "parse_measurement_csv",
    "read_measurement_csv",
    "serialize_measurement_csv",
    "validate_series",
]

log = logging.getLogger(__name__)


class SeriesKind(str, Enum):
    RAIN_RATE = "RainRate"
    EXCEEDANCE_PERCENT = "ExceedancePercent"


COLUMNS = {
    SeriesKind.EXCEEDANCE_PERCENT: ("exceedance_percent", "attenuation_db"),
    SeriesKind.RAIN_RATE: ("rain_rate_mm_per_h", "specific_attenuation_db_per_km"),
}

# plain decimal or scientific notation; no thousands separators, no decimal commas
_NUMBER = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class MeasurementSeries:
    """
    Ordered ``(abscissa, ordinate)`` pairs.

    Abscissas are rain rates in mm/h or exceedance percentages in %;
    ordinates are specific attenuation in dB/km or attenuation in dB.
    Construction only checks shapes, use :func:`validate_series` for the
    full set of invariants.
    """

    kind: SeriesKind
    abscissa: np.ndarray
    ordinate: np.ndarray
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "kind", SeriesKind(self.kind))
        x = np.array(self.abscissa, dtype=float, ndmin=1)
        y = np.array(self.ordinate, dtype=float, ndmin=1)
        if x.ndim != 1 or x.shape != y.shape:
            raise DataError(
                f"abscissa and ordinate must be 1-D of equal length, got {x.shape} and {y.shape}"
            )
        x.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "abscissa", x)
        object.__setattr__(self, "ordinate", y)

    def __len__(self):
        return self.abscissa.size

    def __eq__(self, other):
        if not isinstance(other, MeasurementSeries):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.label == other.label
            and np.array_equal(self.abscissa, other.abscissa)
            and np.array_equal(self.ordinate, other.ordinate)
        )

    __hash__ = None

    def sorted(self) -> "MeasurementSeries":
        """Sort by abscissa, collapsing duplicate abscissas to their largest ordinate."""
        order = np.argsort(self.abscissa, kind="stable")
        x = self.abscissa[order]
        y = self.ordinate[order]
        if x.size > 1 and np.any(x[1:] == x[:-1]):
            ux, start = np.unique(x, return_index=True)
            y = np.maximum.reduceat(y, start)
            x = ux
        return MeasurementSeries(self.kind, x, y, self.label)

    def with_abscissa(self, x) -> "MeasurementSeries":
        return MeasurementSeries(self.kind, x, self.ordinate, self.label)


@dataclass(frozen=True)
class Finding:
    severity: str  # "error" or "warning"
    message: str

    @property
    def is_error(self) -> bool:
        return self.severity == "error"


def validate_series(series: MeasurementSeries) -> list[Finding]:
    """Check a series against the dataset invariants; never raises."""
    findings: list[Finding] = []
    err = lambda msg: findings.append(Finding("error", msg))  # noqa: E731
    x, y = series.abscissa, series.ordinate

    if x.size < 2:
        err(f"series has {x.size} point(s); at least 2 are required")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        err("series contains non-finite values")
    for k in np.flatnonzero(~(x > 0)):
        err(f"abscissa must be > 0 (sample {k}: {float(x[k])!r})")
    for k in np.flatnonzero(~(y > 0)):
        err(f"ordinate must be > 0 (sample {k}: {float(y[k])!r})")
    if x.size > 1 and np.any(np.diff(x) <= 0):
        err("abscissas are not strictly increasing")

    if series.kind is SeriesKind.EXCEEDANCE_PERCENT and x.size > 1:
        order = np.argsort(x, kind="stable")
        xs, ys = x[order], y[order]
        for k in np.flatnonzero(np.diff(ys) > 0):
            findings.append(Finding(
                "warning",
                f"attenuation increases with percentage between p={xs[k]:g} ({ys[k]:g} dB) "
                f"and p={xs[k + 1]:g} ({ys[k + 1]:g} dB)",
            ))
    return findings


def _parse_number(cell: str, row: int, column: str) -> float:
    s = cell.strip()
    if not _NUMBER.match(s):
        raise DataError(f"row {row}: non-numeric value {cell!r} in column {column!r}")
    return float(s)


def parse_measurement_csv(text, label: str = "") -> MeasurementSeries:
    """
    Parse a measurement CSV into a sorted :class:`MeasurementSeries`.

    ``text`` may be ``bytes`` (decoded as UTF-8) or ``str``.  Rows are sorted
    by abscissa; duplicate abscissas keep the largest ordinate.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise DataError(f"CSV is not valid UTF-8: {exc}") from None
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise DataError("empty CSV")
    header = [h.strip() for h in rows[0]]

    for kind, (xcol, ycol) in COLUMNS.items():
        if xcol in header and ycol in header:
            break
    else:
        allowed = " or ".join(f"{a},{b}" for a, b in COLUMNS.values())
        raise DataError(f"unrecognised header {','.join(header)!r}; expected columns {allowed}")
    extra = [h for h in header if h not in (xcol, ycol)]
    if extra:
        log.warning("ignoring extra CSV columns: %s", ", ".join(extra))
    ix, iy = header.index(xcol), header.index(ycol)

    xs, ys = [], []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise DataError(f"row {lineno}: expected {len(header)} cells, got {len(row)}")
        xs.append(_parse_number(row[ix], lineno, xcol))
        ys.append(_parse_number(row[iy], lineno, ycol))
    if len(xs) < 2:
        raise DataError(f"need at least 2 data rows, got {len(xs)}")

    series = MeasurementSeries(kind, xs, ys, label).sorted()
    errors = [f.message for f in validate_series(series) if f.is_error]
    if errors:
        raise DataError("; ".join(errors))
    return series


def read_measurement_csv(path) -> MeasurementSeries:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_measurement_csv(data, label=path.stem)


def serialize_measurement_csv(series: MeasurementSeries) -> str:
    """CSV text that :func:`parse_measurement_csv` reads back to the same series."""
    xcol, ycol = COLUMNS[series.kind]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([xcol, ycol])
    for x, y in zip(series.abscissa, series.ordinate):
        w.writerow([repr(float(x)), repr(float(y))])
    return buf.getvalue()
