import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose, assert_array_equal

from qmm.errors import ConfigError, DomainError
from qmm.models import (
    FAMILIES,
    CalibratedModel,
    ChineseCdf,
    ItuCdf,
    LogLinear,
    ModelSpec,
    PowerLaw,
    YeoCdf,
    base_prediction,
    basis_eval,
    predict,
    transform_ordinate,
)
from qmm.normalization import NormalizationDescriptor

from . import oracles

LN001 = math.log(0.01)

# 17.6559 ** 1.0857, evaluated once with Python's ** operator
CHINESE_57GHZ_AT_ANCHOR = 22.581267809120593


def test_power_law_basis_at_unit_rate():
    assert_array_equal(basis_eval(PowerLaw(1.05, 0.77), 1.0), [math.log(1.05), 0.0])


def test_itu_basis_at_anchor():
    spec = ItuCdf(a001=4.2, b1=0.12, b2=0.60, b3=0.06)
    expected = [math.log(4.2), math.log(0.12), -0.60 * LN001, -0.06 * (-2.0) * LN001]
    assert_allclose(basis_eval(spec, 0.01), expected, rtol=1e-14)
    assert LN001 == pytest.approx(-4.60517, abs=1e-5)


def test_chinese_basis_vanishes_at_anchor():
    spec = ChineseCdf(a001_eq=17.6559, frequency_ghz=57.0)
    assert_array_equal(basis_eval(spec, 0.01), [math.log(17.6559), 0, 0, 0, 0, 0])


def test_yeo_basis_vanishes_at_anchor():
    spec = YeoCdf(a001=25.4999, beta_sin_theta=0.0381)
    assert_array_equal(basis_eval(spec, 0.01), [math.log(25.4999), 0, 0, 0, 0])


def test_log_linear_basis():
    assert_allclose(basis_eval(LogLinear(3.25, 2.5), math.e), [3.25, 2.5], rtol=1e-15)


def test_basis_vectorised_shape():
    for cls, spec in _specs().items():
        x = np.array([0.01, 0.1, 1.0]) if spec.kind == "ExceedancePercent" else np.array([5.0, 50.0, 100.0])
        phi = spec.basis(x)
        assert phi.shape == (spec.n_basis, 3), cls
        assert basis_eval(spec, x[1]).shape == (spec.n_basis,)


def test_basis_counts():
    assert {k: v.n_basis for k, v in FAMILIES.items()} == {
        "PowerLaw": 2, "LogLinear": 2, "ItuCdf": 4, "ChineseCdf": 6, "YeoCdf": 5,
    }


def _specs():
    return {
        "PowerLaw": PowerLaw(1.05, 0.77),
        "LogLinear": LogLinear(3.25, 2.5),
        "ItuCdf": ItuCdf(4.2, 0.12, 0.6, 0.06),
        "ChineseCdf": ChineseCdf(17.6559, 57.0),
        "YeoCdf": YeoCdf(25.4999, 0.0381),
    }


@pytest.mark.parametrize("family", sorted(FAMILIES))
@pytest.mark.parametrize("x", [0.0, -1.0, np.nan])
def test_domain_rejection(family, x):
    spec = _specs()[family]
    with pytest.raises(DomainError, match=family):
        spec.basis([1.0, x])
    with pytest.raises(DomainError, match="sample 1"):
        base_prediction(spec, [1.0, x])


def test_transform_ordinate():
    spec = PowerLaw(1.05, 0.77)
    assert transform_ordinate(spec, 1.0) == 0.0
    assert transform_ordinate(spec, math.exp(2)) == pytest.approx(2.0, rel=1e-15)
    assert transform_ordinate(LogLinear(1, 1), 3.7) == 3.7
    with pytest.raises(DomainError):
        transform_ordinate(spec, 0.0)
    with pytest.raises(DomainError):
        transform_ordinate(spec, [1.0, -2.0])


def test_singapore_power_law_prediction():
    model = CalibratedModel(PowerLaw(1.05, 0.77), [-18.8061, 1.1108])
    expected = 1.05 ** -18.8061 * 50 ** (0.77 * 1.1108)
    assert predict(model, 50.0) == pytest.approx(expected, rel=1e-12)
    assert 1.05 ** -18.8061 == pytest.approx(0.3995, abs=1e-4)


def test_chinese_57ghz_at_anchor():
    norm = NormalizationDescriptor(1000.0, 17.6559, (1e-5, 1e-3), (0.01, 1.0))
    model = CalibratedModel(
        ChineseCdf(17.6559, 57.0),
        [1.0857, -0.0028, -3.5261, 9.8083, -0.6046, -1.9079],
        norm,
    )
    assert model(1e-5) == pytest.approx(CHINESE_57GHZ_AT_ANCHOR, rel=1e-12)
    unnormalised = CalibratedModel(model.spec, model.coefficients)
    assert unnormalised(0.01) == pytest.approx(CHINESE_57GHZ_AT_ANCHOR, rel=1e-12)


def test_base_prediction_values():
    assert base_prediction(PowerLaw(0.567, 0.791), 1.0) == pytest.approx(0.567, rel=1e-15)
    assert base_prediction(YeoCdf(25.4999, 0.0381), 0.01) == pytest.approx(25.4999, rel=1e-15)
    spec = ItuCdf(4.2, 0.12, 0.6, 0.06)
    for p in (0.001, 0.003, 0.1, 1.0):
        direct = 4.2 * 0.12 * p ** -(0.6 + 0.06 * math.log10(p))
        assert base_prediction(spec, p) == pytest.approx(direct, rel=1e-13)


@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_all_ones_is_base(family):
    spec = _specs()[family]
    x = np.array([0.001, 0.01, 0.3]) if spec.kind == "ExceedancePercent" else np.array([1.0, 30.0, 120.0])
    model = CalibratedModel(spec, np.ones(spec.n_basis))
    assert_array_equal(model(x), base_prediction(spec, x))


def test_coefficient_count_checked():
    with pytest.raises(ConfigError, match="needs 4 coefficients"):
        CalibratedModel(ItuCdf(4.2, 0.12, 0.6, 0.06), [1, 1])


@pytest.mark.parametrize("bad", [
    lambda: PowerLaw(0.0, 1.0),
    lambda: ItuCdf(-1.0, 0.12, 0.6, 0.06),
    lambda: ItuCdf(4.2, 0.0, 0.6, 0.06),
    lambda: ChineseCdf(10.0, 0.0),
    lambda: YeoCdf(0.0, 0.1),
    lambda: LogLinear(math.inf, 1.0),
])
def test_parameter_positivity(bad):
    with pytest.raises(ConfigError):
        bad()


def test_spec_dict_round_trip():
    for spec in _specs().values():
        assert ModelSpec.from_dict(spec.to_dict()) == spec
    with pytest.raises(ConfigError, match="unknown model family"):
        ModelSpec.from_dict({"family": "Gaussian", "params": {}})
    with pytest.raises(ConfigError, match="missing"):
        ModelSpec.from_dict({"family": "PowerLaw", "params": {"K": 1.0}})


def _closed_form(spec, c, x):
    if isinstance(spec, PowerLaw):
        return oracles.power_law_closed(spec.K, spec.alpha, c, x)
    if isinstance(spec, LogLinear):
        return oracles.log_linear_closed(spec.a, spec.b, c, x)
    if isinstance(spec, ItuCdf):
        return oracles.itu_closed(spec.a001, spec.b1, spec.b2, spec.b3, c, x)
    if isinstance(spec, ChineseCdf):
        return oracles.chinese_closed(spec.a001_eq, spec.frequency_ghz, c, x)
    return oracles.yeo_closed(spec.a001, spec.beta_sin_theta, c, x)


def random_spec(rng, family):
    u = rng.uniform
    return {
        "PowerLaw": lambda: PowerLaw(u(0.01, 2.0), u(0.5, 1.3)),
        "LogLinear": lambda: LogLinear(u(0.5, 5.0), u(0.5, 5.0)),
        "ItuCdf": lambda: ItuCdf(u(1.0, 40.0), u(0.05, 0.3), u(0.4, 0.8), u(0.02, 0.1)),
        "ChineseCdf": lambda: ChineseCdf(u(5.0, 50.0), u(10.0, 140.0)),
        "YeoCdf": lambda: YeoCdf(u(5.0, 40.0), u(0.0, 0.1)),
    }[family]()


def random_abscissa(rng, spec, n=None):
    if spec.kind == "RainRate":
        return rng.uniform(1.0, 150.0, n)
    return 10 ** rng.uniform(-3.0, 0.0, n)


@given(st.integers(0, 2**32 - 1))
@settings(max_examples=200, deadline=None)
def test_closed_form_equivalence(seed):
    rng = np.random.default_rng(seed)
    for family in sorted(FAMILIES):
        spec = random_spec(rng, family)
        c = rng.uniform(-2.0, 2.0, spec.n_basis)
        x = float(random_abscissa(rng, spec))
        got = CalibratedModel(spec, c)(x)
        want = _closed_form(spec, c, x)
        assert got == pytest.approx(want, rel=1e-12, abs=1e-12 if family == "LogLinear" else 0)
