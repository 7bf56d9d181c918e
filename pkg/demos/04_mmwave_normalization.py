"""
Millimetre-wave links measured down to 1e-5 %.

Scaling by 1000 maps [1e-5, 1e-3] % onto [0.01, 1] %, the range the base
model was built for. A calibrated model keeps its normalisation, so callers
always pass original percentages. At the smallest measured percentage every
term except the anchor vanishes and the prediction is A_eq ** c1.
"""

import json
from importlib.resources import files

from qmm import CalibratedModel, ChineseCdf, FitRequest, NormalizationDescriptor, fit
from qmm import read_measurement_csv

data = files("qmm") / "data"

series = read_measurement_csv(data / "mmwave_57ghz.csv")
model, report = fit(FitRequest(ChineseCdf(a001_eq=30.0, frequency_ghz=57.0), series))
print(f"scale {report.normalization.scale:g}, anchor replaced by {model.spec.a001_eq} dB")
print(f"rank {report.diagnostics.rank} of {model.spec.n_basis}")
print(f"RMSE {report.rmse_base_db:.3f} -> {report.rmse_qmm_db:.3f} dB")

# replaying a published calibration
entry = json.loads((data / "published_models.json").read_text())["chinese_cdf"]["links"]["57GHz"]
norm = NormalizationDescriptor(1000.0, entry["a001_eq"], (1e-5, 1e-3), (0.01, 1.0))
published = CalibratedModel(ChineseCdf(entry["a001_eq"], 57.0), entry["coefficients"], norm)
print(f"published model at 1e-5 %: {published(1e-5):.6f} dB "
      f"(= {entry['a001_eq']} ** {entry['coefficients'][0]} = "
      f"{entry['a001_eq'] ** entry['coefficients'][0]:.6f})")
