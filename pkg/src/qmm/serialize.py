"""JSON (de)serialisation of models, reports and run configurations.

The JSON Schemas live next to this module in ``schemas/``.
"""

from __future__ import annotations

import json
import math
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .errors import ConfigError
from .evaluation import FitReport
from .models import FAMILIES, CalibratedModel, ModelSpec
from .normalization import NormalizationDescriptor

__all__ = [
    "MODEL_FORMAT",
    "REPORT_FORMAT",
    "load_schema",
    "model_to_dict",
    "model_from_dict",
    "report_to_dict",
    "dumps",
    "load_model_file",
    "load_config",
]

MODEL_FORMAT = "qmm-model/1"
REPORT_FORMAT = "qmm-fit-report/1"


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    """Load ``schemas/<name>.schema.json`` (``model``, ``report`` or ``config``)."""
    text = resources.files("qmm").joinpath("schemas", f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def _validate(doc, schema_name: str, what: str) -> None:
    try:
        jsonschema.validate(doc, load_schema(schema_name))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"invalid {what} at {where}: {exc.message}") from None


def _finite_or_none(v: float):
    return v if math.isfinite(v) else None


def model_to_dict(model: CalibratedModel) -> dict:
    return {
        "format": MODEL_FORMAT,
        "family": model.spec.family,
        "params": model.spec.params,
        "transform": model.spec.transform.value,
        "coefficients": [float(c) for c in model.coefficients],
        "normalization": model.normalization.to_dict() if model.normalization else None,
    }


def model_from_dict(d: dict) -> CalibratedModel:
    _validate(d, "model", "model")
    spec = ModelSpec.from_dict(d)
    if d["transform"] != spec.transform.value:
        raise ConfigError(f"{spec.family} uses transform {spec.transform.value}, file says {d['transform']}")
    norm = d.get("normalization")
    return CalibratedModel(
        spec,
        d["coefficients"],
        NormalizationDescriptor.from_dict(norm) if norm else None,
    )


def report_to_dict(report: FitReport) -> dict:
    return {
        "format": REPORT_FORMAT,
        "label": report.label,
        "n_samples": report.n_samples,
        "model": model_to_dict(report.model),
        "rmse_base_db": report.rmse_base_db,
        "rmse_qmm_db": report.rmse_qmm_db,
        "rmse_transformed_base": report.rmse_transformed_base,
        "rmse_transformed_qmm": report.rmse_transformed_qmm,
        "improvement_percent": report.improvement_percent,
        "diagnostics": {
            "rank": report.diagnostics.rank,
            "condition_number": _finite_or_none(report.diagnostics.condition_number),
            "residual_norm": report.diagnostics.residual_norm,
        },
        "normalization": report.normalization.to_dict() if report.normalization else None,
    }


def dumps(doc: dict) -> str:
    # floats are written with repr(), i.e. shortest round-trip (up to 17 digits)
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def _read_json(path, what: str):
    path = Path(path)
    try:
        return json.loads(path.read_text("utf-8"))
    except OSError as exc:
        raise ConfigError(f"cannot read {what} {path}: {exc.strerror or exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{what} {path} is not valid JSON: {exc}") from None


def load_model_file(path) -> CalibratedModel:
    """Load a model JSON, or pull the model out of a fit-report JSON."""
    doc = _read_json(path, "model file")
    if isinstance(doc, dict) and doc.get("format") == REPORT_FORMAT:
        doc = doc.get("model")
    return model_from_dict(doc)


def load_config(path) -> dict:
    """
    Read and validate a run configuration.

    Relative paths inside the config are resolved against the config's
    own directory.
    """
    path = Path(path)
    cfg = _read_json(path, "config")
    _validate(cfg, "config", "config")
    if cfg["model"]["family"] not in FAMILIES:  # pragma: no cover - schema enum guards this
        raise ConfigError(f"unknown family {cfg['model']['family']!r}")
    base = path.parent
    for key in ("data_path", "output_report", "output_model", "output_curve"):
        if key in cfg:
            cfg[key] = str((base / cfg[key]) if not Path(cfg[key]).is_absolute() else Path(cfg[key]))
    cfg.setdefault("normalize", "auto")
    return cfg
