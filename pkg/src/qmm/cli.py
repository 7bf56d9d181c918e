"""
Command-line front end.

    qmm fit --config run.json
    qmm predict --model model.json --at 0.001,0.01,0.1
    qmm predict --model report.json --grid 0.001,1,13
    qmm evaluate --model model.json --data series.csv

Exit codes: 0 success, 2 configuration or model-file error, 3 data error,
4 solver or domain error.  Diagnostics go to stderr; verbosity follows the
``QMM_LOG`` environment variable (error, warn, info, debug; default warn).
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import os
import sys
from pathlib import Path

import numpy as np

from .dataset import COLUMNS, SeriesKind, read_measurement_csv
from .errors import ConfigError, DataError, DomainError, QMMError
from .evaluation import build_report
from .linalg import FitOptions, SolveDiagnostics
from .models import CalibratedModel, ModelSpec
from .pipeline import FitRequest, fit
from .serialize import dumps, load_config, load_model_file, model_to_dict, report_to_dict

log = logging.getLogger("qmm")

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_DATA = 3
EXIT_SOLVER = 4

_LEVELS = {
    "error": logging.ERROR,
    "warn": logging.WARNING,
    "warning": logging.WARNING,
    "info": logging.INFO,
    "debug": logging.DEBUG,
}


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, ConfigError):
        return EXIT_CONFIG
    if isinstance(exc, DataError):
        return EXIT_DATA
    return EXIT_SOLVER  # SolverError, DomainError, other QMMError


def curve_grid(kind: str, lo: float, hi: float, points_per_decade: int) -> np.ndarray:
    """Plot grid: log-spaced for percentages, linear for rain rates."""
    if not (0 < lo < hi):
        raise ConfigError(f"curve grid needs 0 < min < max, got {lo}, {hi}")
    if points_per_decade < 2:
        raise ConfigError("points_per_decade must be >= 2")
    n = max(2, math.ceil(points_per_decade * math.log10(hi / lo)) + 1)
    if kind == SeriesKind.EXCEEDANCE_PERCENT.value:
        return np.logspace(math.log10(lo), math.log10(hi), n)
    return np.linspace(lo, hi, n)


def _write_curve(path, model: CalibratedModel, series, grid_cfg) -> None:
    x_meas = series.abscissa
    lo = grid_cfg.get("min", float(x_meas.min()))
    hi = grid_cfg.get("max", float(x_meas.max()))
    grid = curve_grid(series.kind.value, lo, hi, int(grid_cfg["points_per_decade"]))
    x = np.union1d(grid, x_meas)
    measured = dict(zip(x_meas.tolist(), series.ordinate.tolist()))
    base = CalibratedModel.neutral(model.spec, model.normalization)
    yb, yq = np.atleast_1d(base(x)), np.atleast_1d(model(x))

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([COLUMNS[series.kind][0], "base_prediction", "qmm_prediction", "measurement"])
    for xi, b, q in zip(x.tolist(), yb.tolist(), yq.tolist()):
        m = measured.get(xi)
        w.writerow([repr(xi), repr(b), repr(q), "" if m is None else repr(m)])
    Path(path).write_text(buf.getvalue(), encoding="utf-8")


def cmd_fit(args) -> int:
    cfg = load_config(args.config)
    spec = ModelSpec.from_dict(cfg["model"])
    series = read_measurement_csv(cfg["data_path"])
    opts = FitOptions(weights=cfg.get("weights"), rank_tolerance=cfg.get("rank_tolerance", 1e-12))
    model, report = fit(FitRequest(spec, series, opts, cfg["normalize"]))
    log.info(
        "fitted %s on %d samples: rank %d, dB RMSE %.4f -> %.4f",
        spec.family, len(series), report.diagnostics.rank, report.rmse_base_db, report.rmse_qmm_db,
    )
    Path(cfg["output_report"]).write_text(dumps(report_to_dict(report)), encoding="utf-8")
    if "output_model" in cfg:
        Path(cfg["output_model"]).write_text(dumps(model_to_dict(model)), encoding="utf-8")
    if "output_curve" in cfg:
        _write_curve(cfg["output_curve"], model, series, cfg.get("curve_grid", {"points_per_decade": 10}))
    return EXIT_OK


def _parse_floats(text: str, what: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ConfigError(f"{what}: expected comma-separated numbers, got {text!r}") from None


def cmd_predict(args) -> int:
    model = load_model_file(args.model)
    if args.at is not None:
        x = np.array(_parse_floats(args.at, "--at"))
    else:
        g = _parse_floats(args.grid, "--grid")
        if len(g) != 3 or g[2] < 2 or g[2] != int(g[2]):
            raise ConfigError("--grid expects min,max,n with integer n >= 2")
        lo, hi, n = g[0], g[1], int(g[2])
        if model.spec.kind == SeriesKind.EXCEEDANCE_PERCENT.value:
            if not (lo > 0 and hi > 0):
                raise DomainError(f"{model.spec.family}: grid bounds must be > 0")
            x = np.logspace(math.log10(lo), math.log10(hi), n)
        else:
            x = np.linspace(lo, hi, n)
    y = np.atleast_1d(model(x)) if x.size else np.empty(0)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["x", "prediction"])
    for xi, yi in zip(x.tolist(), y.tolist()):
        out.writerow([repr(xi), repr(yi)])
    return EXIT_OK


def cmd_evaluate(args) -> int:
    model = load_model_file(args.model)
    series = read_measurement_csv(args.data)
    if series.kind.value != model.spec.kind:
        raise DataError(f"{model.spec.family} expects a {model.spec.kind} series, got {series.kind.value}")
    dummy = SolveDiagnostics(rank=model.spec.n_basis, condition_number=math.nan, residual_norm=0.0)
    report = build_report(model, series, dummy)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["metric", "value"])
    out.writerow(["rmse_base_db", repr(report.rmse_base_db)])
    out.writerow(["rmse_qmm_db", repr(report.rmse_qmm_db)])
    imp = report.improvement_percent
    out.writerow(["improvement_percent", "" if imp is None else repr(imp)])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmm", description="Quasi-Moment-Method rain attenuation calibration")
    sub = p.add_subparsers(dest="command", required=True)

    f = sub.add_parser("fit", help="fit a base model to measurements")
    f.add_argument("--config", required=True, help="JSON run configuration")
    f.set_defaults(func=cmd_fit)

    pr = sub.add_parser("predict", help="evaluate a saved model")
    pr.add_argument("--model", required=True, help="model or fit-report JSON")
    where = pr.add_mutually_exclusive_group(required=True)
    where.add_argument("--at", help="comma-separated abscissas")
    where.add_argument("--grid", help="min,max,n (log grid for percentages, linear for rain rates)")
    pr.set_defaults(func=cmd_predict)

    ev = sub.add_parser("evaluate", help="RMSE of a saved model against a measurement CSV")
    ev.add_argument("--model", required=True)
    ev.add_argument("--data", required=True)
    ev.set_defaults(func=cmd_evaluate)
    return p


def _configure_logging() -> None:
    level = _LEVELS.get(os.environ.get("QMM_LOG", "warn").strip().lower(), logging.WARNING)
    root = logging.getLogger("qmm")
    root.setLevel(level)
    if not root.handlers:
        h = logging.StreamHandler(sys.stderr)
        h.setFormatter(logging.Formatter("qmm: %(levelname)s: %(message)s"))
        root.addHandler(h)


def main(argv=None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except QMMError as exc:
        print(f"qmm: error: {exc}", file=sys.stderr)
        return _exit_code(exc)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
