"""Independent oracles used by the test suite.

Everything here deliberately avoids the package's own reduction maps and
eigensolver: partial traces are written as explicit index sums and spectral
references come from numpy.linalg, so agreement is a genuine cross-check
rather than the same code tested against itself.
"""

from __future__ import annotations

import numpy as np

from puritylab.prng import SplitMix64


def index_block_trace(mat: np.ndarray, n: int, m: int) -> np.ndarray:
    """rho1[i, j] = sum_k rho[(i, k), (j, k)] with row index i*m + k."""
    out = np.zeros((n, n), dtype=np.complex128)
    for i in range(n):
        for j in range(n):
            out[i, j] = sum(mat[i * m + k, j * m + k] for k in range(m))
    return out


def index_block_sum(mat: np.ndarray, n: int, m: int) -> np.ndarray:
    """rho2[k, l] = sum_i rho[(i, k), (i, l)]."""
    out = np.zeros((m, m), dtype=np.complex128)
    for k in range(m):
        for l in range(m):
            out[k, l] = sum(mat[i * m + k, i * m + l] for i in range(n))
    return out


def random_hermitian(dim: int, seed: int) -> np.ndarray:
    """(G + G^dagger)/2 with Ginibre G from the packaged stream."""
    gen = SplitMix64(seed)
    g = np.array(
        [[gen.complex_normal() for _ in range(dim)] for _ in range(dim)]
    )
    return 0.5 * (g + g.conj().T)


def numpy_eigenvalues(mat: np.ndarray) -> np.ndarray:
    return np.linalg.eigvalsh(mat)


def numpy_sqrt_psd(mat: np.ndarray) -> np.ndarray:
    vals, vecs = np.linalg.eigh(mat)
    vals = np.clip(vals, 0.0, None)
    return (vecs * np.sqrt(vals)) @ vecs.conj().T


def werner_matrix(p: float) -> np.ndarray:
    """The Werner matrix written out entry by entry (no package code)."""
    mat = np.zeros((4, 4), dtype=np.complex128)
    mat[0, 0] = mat[3, 3] = (1.0 + p) / 4.0
    mat[1, 1] = mat[2, 2] = (1.0 - p) / 4.0
    mat[0, 3] = mat[3, 0] = p / 2.0
    return mat
