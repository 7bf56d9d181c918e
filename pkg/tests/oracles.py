"""
Independent reference computations for the test-suite.

Nothing here calls into :mod:`qmm`'s solver path: elimination and
orthogonalisation are written out with plain Python floats, and the
closed-form predictors are written in their original multiplicative form.
"""

import math

import numpy as np
from scipy.optimize import least_squares


def gauss_solve(A, b):
    """Textbook Gaussian elimination with partial pivoting."""
    n = len(A)
    aug = [list(map(float, row)) + [float(bi)] for row, bi in zip(A, b)]
    for i in range(n):
        piv = max(range(i, n), key=lambda r: abs(aug[r][i]))
        if aug[piv][i] == 0.0:
            raise ZeroDivisionError("singular matrix")
        aug[i], aug[piv] = aug[piv], aug[i]
        for r in range(i + 1, n):
            f = aug[r][i] / aug[i][i]
            for j in range(i, n + 1):
                aug[r][j] -= f * aug[i][j]
    x = [0.0] * n
    for i in reversed(range(n)):
        s = aug[i][n] - sum(aug[i][j] * x[j] for j in range(i + 1, n))
        x[i] = s / aug[i][i]
    return x


def rref_rank(A, tol=1e-9):
    """Rank by row reduction, with a pivot threshold relative to the largest entry."""
    M = [list(map(float, row)) for row in A]
    rows, cols = len(M), len(M[0])
    scale = max(abs(v) for row in M for v in row) or 1.0
    rank = 0
    for c in range(cols):
        piv = max(range(rank, rows), key=lambda r: abs(M[r][c]), default=None)
        if piv is None or abs(M[piv][c]) <= tol * scale:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(rows):
            if r != rank:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
        if rank == rows:
            break
    return rank


def _dot(u, v):
    return math.fsum(a * b for a, b in zip(u, v))


def _orthonormalise(vectors, tol):
    basis = []
    for v in vectors:
        w = list(v)
        for _ in range(2):  # re-orthogonalise once for stability
            for q in basis:
                d = _dot(w, q)
                w = [a - d * b for a, b in zip(w, q)]
        norm = math.sqrt(_dot(w, w))
        if norm > tol:
            basis.append([a / norm for a in w])
    return basis


def null_space_gs(G, tol=1e-7):
    """
    Orthonormal null-space basis of a symmetric matrix by brute force.

    Rows of ``G`` are orthonormalised (Gram-Schmidt) to span the row space;
    the unit vectors e_1..e_M are then orthogonalised against that span and
    whatever survives spans the null space.
    """
    G = [list(map(float, row)) for row in G]
    M = len(G)
    scale = max(math.sqrt(_dot(r, r)) for r in G) or 1.0
    rows = _orthonormalise([[v / scale for v in r] for r in G], tol)
    full = _orthonormalise(rows + [[1.0 if i == j else 0.0 for j in range(M)] for i in range(M)], 1e-8)
    return np.array(full[len(rows):]).reshape(-1, M)


def weighted_objective(phi, y, w, c):
    r = np.asarray(y) - np.asarray(c) @ np.asarray(phi)
    return float(np.sum(np.asarray(w) * r * r))


def brute_force_minimiser(phi, y, w):
    """Minimise the weighted squared error directly with a trust-region iteration."""
    phi, y, w = (np.asarray(a, float) for a in (phi, y, w))
    sw = np.sqrt(w)
    res = least_squares(
        lambda c: sw * (c @ phi - y),
        x0=np.zeros(phi.shape[0]),
        jac=lambda c: (sw[:, None] * phi.T),
        xtol=1e-15, ftol=1e-15, gtol=1e-15, method="lm",
    )
    return res.x, weighted_objective(phi, y, w, res.x)


# ---- closed forms of the recast base models ---------------------------------

def power_law_closed(K, alpha, c, R):
    return K ** c[0] * R ** (alpha * c[1])


def log_linear_closed(a, b, c, R):
    return c[0] * a * math.log(R) + c[1] * b


def itu_closed(a001, b1, b2, b3, c, p):
    return a001 ** c[0] * b1 ** c[1] * p ** -(c[2] * b2 + c[3] * b3 * math.log10(p))


def chinese_closed(a_eq, f, c, pn):
    L = math.log(pn / 0.01)
    expo = (
        -0.854 * c[1]
        + 0.026 * math.log(1 + pn) / pn * c[2]
        + 0.022 * math.log(a_eq) * c[3]
        + 0.03 * math.log(f) * c[4]
        + 0.226 * (1 + pn) * c[5]
    )
    return a_eq ** c[0] * math.exp(expo * L)


def yeo_closed(a001, bst, c, p):
    ratio = p / 0.01
    expo = (
        -1.0063 * c[1]
        - 0.0591 * math.log(p) * c[2]
        + 0.1317 * math.log(a001) * c[3]
        + bst * (1 - p) * c[4]
    )
    return a001 ** c[0] * ratio ** expo
