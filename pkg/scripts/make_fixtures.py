"""
Regenerate the measurement fixtures in ``src/qmm/data``.

The measured series behind the published calibrations were only ever shown
as plots, so these fixtures are synthetic stand-ins.  Each CDF series follows
a lognormal rain-attenuation law, P(A > a) = P0 * Q((ln a - mu) / sigma),
pinned to the anchor attenuations that *are* published exactly (A0.01,
A0.001 and the equivalent A0.01 at 1e-5 %).  Rain-rate series are the
published best-fit laws with 5 % seeded multiplicative jitter.

Run from the repository root:

    python scripts/make_fixtures.py
"""

import json
import math
from pathlib import Path

import numpy as np
from scipy.stats import norm

DATA = Path(__file__).resolve().parents[1] / "src" / "qmm" / "data"
PUBLISHED = json.loads((DATA / "published_models.json").read_text())

P_MALAYSIA = [0.001, 0.002, 0.003, 0.005, 0.01, 0.02, 0.03, 0.05, 0.1]
P_MMWAVE = [1e-5, 2e-5, 3e-5, 5e-5, 1e-4, 2e-4, 3e-4, 5e-4, 1e-3]
P_SLANT = [0.01, 0.02, 0.03, 0.05, 0.1, 0.2, 0.3, 0.5, 1.0]


def lognormal_cdf(p, anchor_p, anchor_a, p0, sigma):
    """Attenuation exceeded for p % of the time, through (anchor_p, anchor_a)."""
    z = norm.isf(np.asarray(p) / p0)
    z_a = norm.isf(anchor_p / p0)
    return anchor_a * np.exp(sigma * (z - z_a))


def two_anchor_sigma(p1, a1, p2, a2, p0):
    return math.log(a1 / a2) / (norm.isf(p1 / p0) - norm.isf(p2 / p0))


def write_csv(name, header, xs, ys, exact=()):
    lines = [",".join(header)]
    for x, y in zip(xs, ys):
        y = float(y) if x in exact else round(float(y), 4)
        lines.append(f"{x!r},{y!r}")
    (DATA / name).write_text("\n".join(lines) + "\n")


def main():
    manifest = []
    cdf_header = ("exceedance_percent", "attenuation_db")
    rr_header = ("rain_rate_mm_per_h", "specific_attenuation_db_per_km")

    # terrestrial links: A0.01 and A0.001 both published
    itu = PUBLISHED["malaysia_itu"]
    for link, d in itu["links"].items():
        p0 = 5.0
        sigma = two_anchor_sigma(0.001, d["a001_normalized"], 0.01, d["a001"], p0)
        a = lognormal_cdf(P_MALAYSIA, 0.01, d["a001"], p0, sigma)
        a[0], a[4] = d["a001_normalized"], d["a001"]
        name = f"terrestrial_{link.lower()}.csv"
        write_csv(name, cdf_header, P_MALAYSIA, a, exact=(0.001, 0.01))
        manifest.append({
            "name": f"terrestrial_{link}", "file": name,
            "model": {"family": "ItuCdf", "params": {"a001": d["a001"], **itu["params"]}},
            "normalize": "auto", "expected_scale": 10,
            "anchors": {"0.001": d["a001_normalized"], "0.01": d["a001"]},
        })

    # millimetre-wave links: only the attenuation at 1e-5 % is published
    for link, d in PUBLISHED["chinese_cdf"]["links"].items():
        a = lognormal_cdf(P_MMWAVE, 1e-5, d["a001_eq"], p0=0.5, sigma=0.9)
        a[0] = d["a001_eq"]
        name = f"mmwave_{link.lower().replace('.', 'p')}.csv"
        write_csv(name, cdf_header, P_MMWAVE, a, exact=(1e-5,))
        manifest.append({
            "name": f"mmwave_{link}", "file": name,
            "model": {"family": "ChineseCdf",
                      "params": {"a001_eq": d["a001_eq"], "frequency_ghz": d["frequency_ghz"]}},
            "normalize": "auto", "expected_scale": 1000,
            "anchors": {"1e-05": d["a001_eq"]},
        })

    # slant paths: A0.01 published, percentages already within 0.01..1 %
    for site, d in PUBLISHED["yeo_cdf"]["sites"].items():
        a = lognormal_cdf(P_SLANT, 0.01, d["a001"], p0=6.0, sigma=1.15)
        a[0] = d["a001"]
        name = f"slant_{site.lower()}.csv"
        write_csv(name, cdf_header, P_SLANT, a, exact=(0.01,))
        manifest.append({
            "name": f"slant_{site}", "file": name,
            "model": {"family": "YeoCdf",
                      "params": {"a001": d["a001"], "beta_sin_theta": d["beta_sin_theta"]}},
            "normalize": "auto", "expected_scale": 1,
            "anchors": {"0.01": d["a001"]},
        })

    rng = np.random.default_rng(20231022)
    R = np.arange(10.0, 160.0, 10.0)
    bf = PUBLISHED["power_law_singapore"]["reference_best_fit"]
    g = bf["K"] * R ** bf["alpha"] * np.exp(rng.normal(0.0, 0.05, R.size))
    write_csv("rainrate_singapore.csv", rr_header, R.tolist(), g)
    manifest.append({
        "name": "rainrate_singapore", "file": "rainrate_singapore.csv",
        "model": {"family": "PowerLaw", "params": PUBLISHED["power_law_singapore"]["params"]},
        "normalize": "off",
    })

    # log-linear month: the published February curve, jittered
    sa = PUBLISHED["south_africa_monthly"]
    c1, c2 = sa["months"]["February"]["log_linear"]
    R = np.arange(5.0, 105.0, 5.0)
    g = (c1 * sa["log_linear_params"]["a"] * np.log(R) + c2 * sa["log_linear_params"]["b"])
    g = g * np.exp(rng.normal(0.0, 0.05, R.size))
    write_csv("rainrate_february.csv", rr_header, R.tolist(), g)
    manifest.append({
        "name": "rainrate_february", "file": "rainrate_february.csv",
        "model": {"family": "LogLinear", "params": sa["log_linear_params"]},
        "normalize": "off",
    })

    (DATA / "fixtures.json").write_text(json.dumps({
        "_note": "Synthetic stand-ins for plot-only measurements; see scripts/make_fixtures.py. "
                 "Only the anchor values are published numbers.",
        "fixtures": manifest,
    }, indent=2) + "\n")


if __name__ == "__main__":
    main()
