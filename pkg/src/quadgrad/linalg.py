"""Dense linear algebra: symmetric eigenvalue extremes, pivoted solve, pseudoinverse.

Everything here works on plain float64 numpy arrays: matrices are square
(n, n) arrays, vectors are (n,) arrays. The heavy lifting is delegated to
LAPACK through numpy/scipy; this module adds the validation and error
contracts the rest of the package relies on.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DimensionError, InvalidMatrix, SingularMatrix

DEFAULT_SYMMETRY_TOL = 1e-9
DEFAULT_PIVOT_TOL = 1e-12
DEFAULT_RANK_TOL = 1e-12


@dataclass(frozen=True)
class SpectralBounds:
    """Extreme eigenvalues of a symmetric matrix.

    ``spectral_radius`` is ``max(|lambda_min|, |lambda_max|)``.
    """

    lambda_min: float
    lambda_max: float
    spectral_radius: float


def as_square_matrix(a) -> np.ndarray:
    """Coerce to a float64 square matrix, raising InvalidMatrix otherwise."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise InvalidMatrix(f"expected a square matrix, got shape {m.shape}")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce to a float64 vector, raising DimensionError otherwise."""
    x = np.asarray(v, dtype=float)
    if x.ndim != 1 or x.shape[0] < 1:
        raise DimensionError(f"expected a vector, got shape {x.shape}")
    return x


def is_symmetric(a, tol: float = DEFAULT_SYMMETRY_TOL) -> bool:
    """True when |a_ij - a_ji| <= tol * (1 + max|a|) for all entries."""
    m = as_square_matrix(a)
    scale = 1.0 + np.max(np.abs(m), initial=0.0)
    return bool(np.max(np.abs(m - m.T), initial=0.0) <= tol * scale)


def spectral_bounds(h, tol: float = DEFAULT_SYMMETRY_TOL) -> SpectralBounds:
    """Smallest and largest eigenvalue of a symmetric matrix.

    Raises InvalidMatrix for non-finite entries or asymmetry beyond ``tol``.
    """
    m = as_square_matrix(h)
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    if not is_symmetric(m, tol):
        raise InvalidMatrix("matrix is not symmetric within tolerance")
    eigenvalues = np.linalg.eigvalsh(m)
    lo = float(eigenvalues[0])
    hi = float(eigenvalues[-1])
    return SpectralBounds(lo, hi, max(abs(lo), abs(hi)))


def solve(a, b, tol: float = DEFAULT_PIVOT_TOL) -> np.ndarray:
    """Solve ``a @ x = b`` by partially pivoted LU.

    Raises SingularMatrix when any pivot falls below ``tol * max|a|``,
    signalling the caller to switch to the pseudoinverse path.
    """
    m = as_square_matrix(a)
    rhs = as_vector(b)
    if rhs.shape[0] != m.shape[0]:
        raise DimensionError(
            f"matrix order {m.shape[0]} does not match vector length {rhs.shape[0]}"
        )
    if not (np.all(np.isfinite(m)) and np.all(np.isfinite(rhs))):
        raise InvalidMatrix("solve requires finite inputs")
    with warnings.catch_warnings():
        # zero pivots are an expected condition here; we raise SingularMatrix
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    pivots = np.abs(np.diag(lu))
    if np.min(pivots) < tol * max(np.max(np.abs(m)), np.finfo(float).tiny):
        raise SingularMatrix("pivot below tolerance; matrix is numerically singular")
    return scipy.linalg.lu_solve((lu, piv), rhs, check_finite=False)


def pseudoinverse(a, rank_tol: float = DEFAULT_RANK_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse via SVD.

    Singular values below ``rank_tol * sigma_max * order`` are treated as
    zero. The result satisfies the four Penrose conditions to roundoff.
    """
    m = as_square_matrix(a)
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("pseudoinverse requires finite entries")
    u, sigma, vt = np.linalg.svd(m)
    if sigma[0] == 0.0:
        return np.zeros_like(m.T)
    cutoff = rank_tol * sigma[0] * m.shape[0]
    inv_sigma = np.zeros_like(sigma)
    keep = sigma > cutoff
    inv_sigma[keep] = 1.0 / sigma[keep]
    return (vt.T * inv_sigma) @ u.T
