"""Dense complex Hermitian eigendecomposition and spectral matrix functions.

Matrices here are tiny (dimension 8 at most in practice), so a cyclic Jacobi
iteration with complex plane rotations is accurate, deterministic and free of
solver dependencies.  numpy supplies only array storage and arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .defaults import CLAMP_TOL, EIG_OFFDIAG_FACTOR, EIG_SWEEP_CAP, VALIDATION_TOL
from .errors import (
    DimMismatch,
    DomainError,
    NegativeSpectrum,
    NoConvergence,
    NotHermitian,
    ZeroToNegativePower,
)


def as_square_matrix(mat) -> np.ndarray:
    """Coerce to a square complex128 array, rejecting non-finite entries."""
    arr = np.asarray(mat, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise DimMismatch(f"expected a square matrix, got shape {arr.shape}")
    if not np.isfinite(arr).all():
        raise DomainError("matrix contains NaN or Inf entries")
    return arr


def hermiticity_defect(mat: np.ndarray) -> float:
    """Largest absolute entry of mat - mat^dagger."""
    return float(np.abs(mat - mat.conj().T).max())


@dataclass(frozen=True)
class HermitianEigen:
    """Eigenvalues ascending; eigenvector columns orthonormal, V diag(w) V^dagger
    reconstructs the input.  Ties keep the order produced by the rotation
    history, which is a pure function of the input bytes."""

    values: np.ndarray
    vectors: np.ndarray


def hermitian_eig(mat, tol: float = VALIDATION_TOL) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.

    The input must be Hermitian within ``tol`` (largest entry of m - m^dagger).
    Sweeps stop when the off-diagonal Frobenius norm falls below
    EIG_OFFDIAG_FACTOR times the Frobenius norm of the input; more than
    EIG_SWEEP_CAP sweeps raises NoConvergence.
    """
    arr = as_square_matrix(mat)
    defect = hermiticity_defect(arr)
    if defect > tol:
        raise NotHermitian(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")

    a = 0.5 * (arr + arr.conj().T)
    dim = a.shape[0]
    v = np.eye(dim, dtype=np.complex128)
    target = EIG_OFFDIAG_FACTOR * float(np.linalg.norm(arr))

    # Elements already below skip_below cannot lift the off-diagonal norm back
    # above target, so rotating them only risks degenerate divisions.
    skip_below = target / (2.0 * dim)
    sweeps = 0
    while _offdiag_norm(a) > target:
        if sweeps >= EIG_SWEEP_CAP:
            raise NoConvergence(
                f"off-diagonal norm {_offdiag_norm(a):.3e} above target "
                f"{target:.3e} after {EIG_SWEEP_CAP} sweeps"
            )
        for p in range(dim - 1):
            for q in range(p + 1, dim):
                _rotate(a, v, p, q, skip_below)
        sweeps += 1

    values = a.diagonal().real.copy()
    order = np.argsort(values, kind="stable")
    return HermitianEigen(values=values[order], vectors=v[:, order])


def _offdiag_norm(a: np.ndarray) -> float:
    # Summed directly (not total minus diagonal) to avoid cancellation noise.
    off = a.copy()
    np.fill_diagonal(off, 0.0)
    return float(np.linalg.norm(off))


def _rotate(a: np.ndarray, v: np.ndarray, p: int, q: int, skip_below: float) -> None:
    """One complex Jacobi rotation annihilating a[p, q] in place."""
    apq = a[p, q]
    r = abs(apq)
    if r <= skip_below:
        return
    phase = apq / r
    tau = (a[p, p].real - a[q, q].real) / (2.0 * r)
    sign = 1.0 if tau >= 0.0 else -1.0
    t = sign / (abs(tau) + math.hypot(1.0, tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    s = t * c

    # a <- J^dagger a J with the (p,q)-plane rotation
    # J[p,p]=c, J[p,q]=-s*phase, J[q,p]=s*conj(phase), J[q,q]=c.
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p + s * np.conj(phase) * col_q
    a[:, q] = -s * phase * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p + s * phase * row_q
    a[q, :] = -s * np.conj(phase) * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real

    vcol_p = v[:, p].copy()
    vcol_q = v[:, q].copy()
    v[:, p] = c * vcol_p + s * np.conj(phase) * vcol_q
    v[:, q] = -s * phase * vcol_p + c * vcol_q


def hermitian_eigenvalues(mat, tol: float = VALIDATION_TOL) -> np.ndarray:
    return hermitian_eig(mat, tol).values


def psd_matrix_power(mat, exponent: float, tol: float = CLAMP_TOL) -> np.ndarray:
    """Spectral power of a positive-semidefinite Hermitian matrix.

    Eigenvalues in [-tol, 0) are clamped to 0 before powering, so numerically
    rounded PSD inputs never produce complex powers.  Eigenvalues below -tol
    raise NegativeSpectrum; a clamped zero eigenvalue combined with a negative
    exponent raises ZeroToNegativePower.
    """
    eigen = hermitian_eig(mat, tol=tol)
    smallest = float(eigen.values[0])
    if smallest < -tol:
        raise NegativeSpectrum(f"smallest eigenvalue {smallest:.3e} below -{tol:.3e}")
    clamped = np.clip(eigen.values, 0.0, None)
    if exponent < 0.0 and (clamped == 0.0).any():
        raise ZeroToNegativePower(
            f"exponent {exponent} applied to a zero (clamped) eigenvalue"
        )
    powered = clamped ** exponent
    out = (eigen.vectors * powered) @ eigen.vectors.conj().T
    return 0.5 * (out + out.conj().T)


def trace(mat) -> complex:
    """Sum of diagonal entries."""
    arr = as_square_matrix(mat)
    return complex(arr.trace())


def frobenius_distance(a, b) -> float:
    """Frobenius norm of a - b; zero iff the matrices are equal."""
    left = as_square_matrix(a)
    right = as_square_matrix(b)
    if left.shape != right.shape:
        raise DimMismatch(f"dimension mismatch: {left.shape} vs {right.shape}")
    return float(np.linalg.norm(left - right))
