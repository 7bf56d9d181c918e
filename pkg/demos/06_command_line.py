"""
The same workflow through the ``qmm`` command.

A JSON config names the base model, the measurement CSV and where to write
outputs. ``fit`` writes a report (which embeds the calibrated model) and an
optional curve CSV. ``predict`` and ``evaluate`` take either that report or
a bare model file.
"""

import json
import tempfile
from importlib.resources import files
from pathlib import Path

from qmm.cli import main

csv_path = files("qmm") / "data" / "mmwave_97ghz.csv"

with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    config = {
        "model": {"family": "ChineseCdf", "params": {"a001_eq": 40.0, "frequency_ghz": 97.0}},
        "data_path": str(csv_path),
        "normalize": "auto",
        "output_report": "report.json",
        "output_curve": "curve.csv",
    }
    (tmp / "run.json").write_text(json.dumps(config))

    print("exit", main(["fit", "--config", str(tmp / "run.json")]))
    report = json.loads((tmp / "report.json").read_text())
    print("scale", report["normalization"]["scale"], "rmse", round(report["rmse_qmm_db"], 4))

    main(["predict", "--model", str(tmp / "report.json"), "--at", "1e-5,1e-4,1e-3"])
    main(["evaluate", "--model", str(tmp / "report.json"), "--data", str(csv_path)])

    # failures map to exit codes instead of tracebacks
    print("exit", main(["predict", "--model", str(tmp / "report.json"), "--at", "0"]))
