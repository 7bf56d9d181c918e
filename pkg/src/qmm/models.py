"""
Base-model families recast as linear combinations of basis functions.

Each family fixes a basis ``phi_1 .. phi_M`` and an ordinate transform such
that the base model reads ``T(X) = phi_1(x) + ... + phi_M(x)``.  A calibrated
model re-weights the terms, ``T(X) = sum_m c_m phi_m(x)``, and predicts by
inverting ``T``.

=============  =====  ==========  ==========================================
family         M      transform   abscissa
=============  =====  ==========  ==========================================
PowerLaw       2      ln          rain rate R (mm/h)
LogLinear      2      identity    rain rate R (mm/h)
ItuCdf         4      ln          exceedance percentage p (%)
ChineseCdf     6      ln          normalised exceedance percentage p_n (%)
YeoCdf         5      ln          exceedance percentage p (%)
=============  =====  ==========  ==========================================
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields
from enum import Enum
from typing import ClassVar

import numpy as np

from .errors import ConfigError, DomainError

__all__ = [
    "Transform",
    "ModelSpec",
    "PowerLaw",
    "LogLinear",
    "ItuCdf",
    "ChineseCdf",
    "YeoCdf",
    "FAMILIES",
    "CalibratedModel",
    "basis_eval",
    "transform_ordinate",
    "inverse_transform",
    "predict",
    "base_prediction",
]

_LN10 = math.log(10.0)


class Transform(str, Enum):
    NATURAL_LOG = "NaturalLog"
    IDENTITY = "Identity"


def _positive_abscissa(family: str, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    bad = np.flatnonzero(~(x.ravel() > 0))
    if bad.size:
        k = int(bad[0])
        raise DomainError(
            f"{family}: abscissa must be > 0, got {float(x.ravel()[k])!r} at sample {k}"
        )
    return x


def _require_positive(family: str, **values) -> None:
    for name, v in values.items():
        if not (v > 0 and math.isfinite(v)):
            raise ConfigError(f"{family}: parameter {name} must be finite and > 0, got {v!r}")


def _require_finite(family: str, **values) -> None:
    for name, v in values.items():
        if not math.isfinite(v):
            raise ConfigError(f"{family}: parameter {name} must be finite, got {v!r}")


@dataclass(frozen=True)
class ModelSpec:
    """A base-model family with its fixed parameters."""

    family: ClassVar[str]
    n_basis: ClassVar[int]
    transform: ClassVar[Transform] = Transform.NATURAL_LOG
    # abscissa kind this family consumes
    kind: ClassVar[str] = "ExceedancePercent"

    def _basis(self, x: np.ndarray) -> list:
        raise NotImplementedError

    def basis(self, x) -> np.ndarray:
        """Basis values, shape ``(M,)`` for scalar ``x`` or ``(M, N)`` for a vector."""
        x = _positive_abscissa(self.family, x)
        # overflow surfaces later as a non-finite basis value
        with np.errstate(over="ignore", invalid="ignore"):
            rows = self._basis(x)
        return np.stack([np.broadcast_to(r, x.shape).astype(float) for r in rows])

    @property
    def params(self) -> dict:
        return asdict(self)

    def replace(self, **changes) -> "ModelSpec":
        return type(self)(**{**self.params, **changes})

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params}

    @staticmethod
    def from_dict(d: dict) -> "ModelSpec":
        try:
            cls = FAMILIES[d["family"]]
        except KeyError:
            raise ConfigError(
                f"unknown model family {d.get('family')!r}; expected one of {sorted(FAMILIES)}"
            ) from None
        params = d.get("params", {})
        names = {f.name for f in fields(cls)}
        unknown = set(params) - names
        missing = names - set(params)
        if unknown or missing:
            raise ConfigError(
                f"{cls.family}: bad parameters (unknown {sorted(unknown)}, missing {sorted(missing)})"
            )
        try:
            return cls(**{k: float(v) for k, v in params.items()})
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"{cls.family}: {exc}") from None


@dataclass(frozen=True)
class PowerLaw(ModelSpec):
    """``gamma = K R**alpha``; basis ``[ln K, alpha ln R]``."""

    K: float
    alpha: float

    family: ClassVar[str] = "PowerLaw"
    n_basis: ClassVar[int] = 2
    kind: ClassVar[str] = "RainRate"

    def __post_init__(self):
        _require_positive(self.family, K=self.K)
        _require_finite(self.family, alpha=self.alpha)

    def _basis(self, R):
        return [math.log(self.K), self.alpha * np.log(R)]


@dataclass(frozen=True)
class LogLinear(ModelSpec):
    """``gamma = a ln R + b``, fitted without an ordinate transform."""

    a: float
    b: float

    family: ClassVar[str] = "LogLinear"
    n_basis: ClassVar[int] = 2
    transform: ClassVar[Transform] = Transform.IDENTITY
    kind: ClassVar[str] = "RainRate"

    def __post_init__(self):
        _require_finite(self.family, a=self.a, b=self.b)

    def _basis(self, R):
        return [self.a * np.log(R), self.b]


@dataclass(frozen=True)
class ItuCdf(ModelSpec):
    """
    ``A_p = A001 * b1 * p**-(b2 + b3 log10 p)``.

    The first two basis functions are both constant in ``p``, so the Gram
    matrix of this family has rank 3 at most.
    """

    a001: float
    b1: float
    b2: float
    b3: float

    family: ClassVar[str] = "ItuCdf"
    n_basis: ClassVar[int] = 4

    def __post_init__(self):
        _require_positive(self.family, a001=self.a001, b1=self.b1)
        _require_finite(self.family, b2=self.b2, b3=self.b3)

    def _basis(self, p):
        lnp = np.log(p)
        return [
            math.log(self.a001),
            math.log(self.b1),
            -self.b2 * lnp,
            -self.b3 * (lnp / _LN10) * lnp,
        ]


@dataclass(frozen=True)
class ChineseCdf(ModelSpec):
    """Six-term CDF model anchored on an (equivalent) 0.01 % attenuation."""

    a001_eq: float
    frequency_ghz: float

    family: ClassVar[str] = "ChineseCdf"
    n_basis: ClassVar[int] = 6

    def __post_init__(self):
        _require_positive(self.family, a001_eq=self.a001_eq, frequency_ghz=self.frequency_ghz)

    def _basis(self, pn):
        L = np.log(pn / 0.01)
        ln_a = math.log(self.a001_eq)
        return [
            ln_a,
            -0.854 * L,
            (0.026 * np.log1p(pn) / pn) * L,
            (0.022 * ln_a) * L,
            (0.03 * math.log(self.frequency_ghz)) * L,
            (0.226 * (1.0 + pn)) * L,
        ]


@dataclass(frozen=True)
class YeoCdf(ModelSpec):
    """Five-term slant-path CDF model; ``beta_sin_theta`` is one site constant."""

    a001: float
    beta_sin_theta: float

    family: ClassVar[str] = "YeoCdf"
    n_basis: ClassVar[int] = 5

    def __post_init__(self):
        _require_positive(self.family, a001=self.a001)
        _require_finite(self.family, beta_sin_theta=self.beta_sin_theta)

    def _basis(self, p):
        L = np.log(p / 0.01)
        ln_a = math.log(self.a001)
        return [
            ln_a,
            -1.0063 * L,
            (-0.0591 * np.log(p)) * L,
            (0.1317 * ln_a) * L,
            (self.beta_sin_theta * (1.0 - p)) * L,
        ]


FAMILIES: dict[str, type[ModelSpec]] = {
    cls.family: cls for cls in (PowerLaw, LogLinear, ItuCdf, ChineseCdf, YeoCdf)
}

# families whose a001-type anchor is replaced by the equivalent A0.01 under normalisation
ANCHOR_PARAM = {"ItuCdf": "a001", "ChineseCdf": "a001_eq", "YeoCdf": "a001"}


def basis_eval(spec: ModelSpec, x) -> np.ndarray:
    return spec.basis(x)


def transform_ordinate(spec: ModelSpec, y):
    """Map measured ordinates into the space where the base model is linear."""
    if spec.transform is Transform.IDENTITY:
        return np.asarray(y, dtype=float) if np.ndim(y) else float(y)
    y_arr = np.asarray(y, dtype=float)
    bad = np.flatnonzero(~(y_arr.ravel() > 0))
    if bad.size:
        k = int(bad[0])
        raise DomainError(
            f"{spec.family}: ordinate must be > 0 for a log transform, got {float(y_arr.ravel()[k])!r} at sample {k}"
        )
    out = np.log(y_arr)
    return out if np.ndim(y) else float(out)


def inverse_transform(spec: ModelSpec, t):
    if spec.transform is Transform.IDENTITY:
        return t
    return np.exp(t)


@dataclass(frozen=True, eq=False)
class CalibratedModel:
    """A base model with its fitted coefficients (and optional normalisation)."""

    spec: ModelSpec
    coefficients: np.ndarray
    normalization: object = None  # NormalizationDescriptor | None

    def __post_init__(self):
        c = np.array(self.coefficients, dtype=float, ndmin=1)
        if c.shape != (self.spec.n_basis,):
            raise ConfigError(
                f"{self.spec.family} needs {self.spec.n_basis} coefficients, got {c.size}"
            )
        if not np.all(np.isfinite(c)):
            raise ConfigError("coefficients must be finite")
        c.flags.writeable = False
        object.__setattr__(self, "coefficients", c)

    @classmethod
    def neutral(cls, spec: ModelSpec, normalization=None) -> "CalibratedModel":
        """The base model itself: every coefficient equal to one."""
        return cls(spec, np.ones(spec.n_basis), normalization)

    def model_abscissa(self, x):
        """Raw abscissa -> the abscissa the basis functions are evaluated at."""
        if self.normalization is None:
            return x
        return np.asarray(x, dtype=float) * self.normalization.scale

    def transformed(self, x):
        """``sum_m c_m phi_m`` at ``x`` (prediction before the inverse transform)."""
        phi = self.spec.basis(self.model_abscissa(x))
        return self.coefficients @ phi

    def __call__(self, x):
        out = inverse_transform(self.spec, self.transformed(x))
        return float(out) if np.ndim(out) == 0 else out

    def __eq__(self, other):
        if not isinstance(other, CalibratedModel):
            return NotImplemented
        return (
            self.spec == other.spec
            and np.array_equal(self.coefficients, other.coefficients)
            and self.normalization == other.normalization
        )

    __hash__ = None


def predict(model: CalibratedModel, x):
    return model(x)


def base_prediction(spec: ModelSpec, x, normalization=None):
    return CalibratedModel.neutral(spec, normalization)(x)
