"""
Gram-matrix assembly and solution of the QMM normal system.

The fit minimises the weighted squared error

    sum_k w_k * (X(x_k) - sum_m c_m phi_m(x_k))**2

whose stationarity condition is ``G c = b`` with ``G[m, n] = <phi_m, phi_n>``
and ``b[m] = <phi_m, X>``.  Several of the rain-attenuation base models carry
more than one constant (or proportional) basis function, so ``G`` is
routinely singular; :func:`solve_coefficients` then returns the
minimum-norm least-squares solution from a truncated SVD.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import SolverError

__all__ = [
    "DesignSamples",
    "FitOptions",
    "SolveDiagnostics",
    "gram_matrix",
    "moment_vector",
    "solve_coefficients",
]

# above this many samples Gram entries are accumulated with math.fsum
_COMPENSATED_THRESHOLD = 1000


@dataclass(frozen=True)
class DesignSamples:
    """Basis values ``phi`` (M x N) and transformed ordinates ``y`` (N)."""

    phi: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        phi = np.array(self.phi, dtype=float, ndmin=2)
        y = np.array(self.y, dtype=float, ndmin=1)
        if phi.ndim != 2:
            raise SolverError(f"phi must be 2-D (M x N), got shape {phi.shape}")
        m, n = phi.shape
        if m < 1 or n < 1:
            raise SolverError(f"need at least one basis and one sample, got {m} x {n}")
        if y.shape != (n,):
            raise SolverError(f"y has shape {y.shape}, expected ({n},)")
        phi.flags.writeable = False
        y.flags.writeable = False
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "y", y)

    @property
    def n_basis(self) -> int:
        return self.phi.shape[0]

    @property
    def n_samples(self) -> int:
        return self.phi.shape[1]


@dataclass(frozen=True)
class FitOptions:
    """Sample weights and the relative singular-value cutoff."""

    weights: np.ndarray | None = None
    rank_tolerance: float = 1e-12

    def __post_init__(self):
        if not (self.rank_tolerance >= 0 and math.isfinite(self.rank_tolerance)):
            raise SolverError(f"rank_tolerance must be finite and >= 0, got {self.rank_tolerance}")
        if self.weights is not None:
            w = np.array(self.weights, dtype=float, ndmin=1)
            if w.ndim != 1:
                raise SolverError("weights must be a 1-D vector")
            if not np.all(np.isfinite(w)) or np.any(w < 0):
                raise SolverError("weights must be finite and nonnegative")
            if not np.any(w > 0):
                raise SolverError("at least one weight must be positive")
            w.flags.writeable = False
            object.__setattr__(self, "weights", w)

    def weights_for(self, n: int) -> np.ndarray:
        if self.weights is None:
            return np.ones(n)
        if self.weights.shape != (n,):
            raise SolverError(f"weights has length {self.weights.size}, expected {n}")
        return self.weights


@dataclass(frozen=True)
class SolveDiagnostics:
    rank: int
    condition_number: float
    residual_norm: float
    singular_values: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "condition_number": self.condition_number,
            "residual_norm": self.residual_norm,
        }


def _check_finite(samples: DesignSamples) -> None:
    bad = np.argwhere(~np.isfinite(samples.phi))
    if bad.size:
        m, k = bad[0]
        raise SolverError(
            f"non-finite basis value {float(samples.phi[m, k])!r} at basis index {m}, sample index {k}"
        )
    bad = np.flatnonzero(~np.isfinite(samples.y))
    if bad.size:
        raise SolverError(f"non-finite ordinate {float(samples.y[bad[0]])!r} at sample index {bad[0]}")


def _inner(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> float:
    if u.size > _COMPENSATED_THRESHOLD:
        return math.fsum(w * u * v)
    return float(np.dot(w * u, v))


def gram_matrix(samples: DesignSamples, opts: FitOptions | None = None) -> np.ndarray:
    """
    Weighted Gram matrix ``G[m, n] = sum_k w_k phi_m(x_k) phi_n(x_k)``.

    Only the upper triangle is accumulated; the lower one is mirrored so the
    result is exactly symmetric.
    """
    opts = opts or FitOptions()
    _check_finite(samples)
    w = opts.weights_for(samples.n_samples)
    phi = samples.phi
    M = samples.n_basis
    G = np.empty((M, M))
    for m in range(M):
        for n in range(m, M):
            G[m, n] = G[n, m] = _inner(phi[m], phi[n], w)
    return G


def moment_vector(samples: DesignSamples, opts: FitOptions | None = None) -> np.ndarray:
    """Weighted moments ``b[m] = sum_k w_k phi_m(x_k) X(x_k)``."""
    opts = opts or FitOptions()
    _check_finite(samples)
    w = opts.weights_for(samples.n_samples)
    return np.array([_inner(row, samples.y, w) for row in samples.phi])


def solve_coefficients(G, b, opts: FitOptions | None = None):
    """
    Solve ``G c = b`` for the basis coefficients.

    Parameters
    ----------
    G : (M, M) array_like
        Symmetric Gram matrix.
    b : (M,) array_like
        Moment vector.
    opts : FitOptions, optional
        Only ``rank_tolerance`` is used here.

    Returns
    -------
    c : ndarray
        The unique solution when ``G`` has full rank, otherwise the
        minimum-Euclidean-norm least-squares solution.  Singular values
        below ``rank_tolerance * s_max`` are treated as zero.
    diag : SolveDiagnostics
        Numerical rank, condition number (``inf`` when rank-deficient) and
        ``||G c - b||``.
    """
    opts = opts or FitOptions()
    G = np.asarray(G, dtype=float)
    b = np.asarray(b, dtype=float)
    if G.ndim != 2 or G.shape[0] != G.shape[1]:
        raise SolverError(f"G must be square, got shape {G.shape}")
    M = G.shape[0]
    if M == 0:
        raise SolverError("empty system: no basis functions")
    if b.shape != (M,):
        raise SolverError(f"b has shape {b.shape}, expected ({M},)")
    if not (np.all(np.isfinite(G)) and np.all(np.isfinite(b))):
        raise SolverError("G and b must be finite")

    U, s, Vt = np.linalg.svd(G)
    s_max = s[0] if s.size else 0.0
    keep = s > opts.rank_tolerance * s_max if s_max > 0 else np.zeros(M, dtype=bool)
    rank = int(np.count_nonzero(keep))
    if rank == 0:
        if np.any(b != 0):
            raise SolverError("no informative basis: Gram matrix is numerically zero")
        c = np.zeros(M)
    else:
        c = Vt[keep].T @ ((U[:, keep].T @ b) / s[keep])

    cond = float(s_max / s[rank - 1]) if rank == M else math.inf
    diag = SolveDiagnostics(
        rank=rank,
        condition_number=cond,
        residual_norm=float(np.linalg.norm(G @ c - b)),
        singular_values=tuple(float(v) for v in s),
    )
    return c, diag
