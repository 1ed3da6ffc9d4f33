"""Density matrices with block structure, partial-trace maps and purities.

An N x N state with N = n*m is viewed as an n x n grid of m x m blocks
a_ij.  Two reduction maps act on it:

* block trace (over the inner index): the n x n matrix with entries Tr a_ij;
* block sum (over the outer index): the m x m matrix sum_k a_kk.

Row r of the full matrix corresponds to the index pair (i, k) with
r = i*m + k, i indexing blocks and k indexing positions inside a block.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .defaults import VALIDATION_TOL
from .errors import BadRank, NotHermitian, NotPositive, ShapeMismatch, TraceNotOne
from .linalg import (
    as_square_matrix,
    hermitian_eig,
    hermiticity_defect,
)
from .prng import SplitMix64


@dataclass(frozen=True)
class BlockShape:
    """n blocks per side, each block m x m; the full dimension is n*m."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ShapeMismatch(f"block shape must be positive, got ({self.n}, {self.m})")

    @property
    def dim(self) -> int:
        return self.n * self.m


@dataclass(frozen=True)
class DensityMatrix:
    """Validated state: Hermitian, unit trace and PSD within ``tol``."""

    mat: np.ndarray
    shape: BlockShape
    tol: float


@dataclass(frozen=True)
class PuritySet:
    """The four purity scalars of one state and their difference.

    ``delta`` is ``mu_tilde - mu12``, the quantity whose sign the
    entanglement scans track.
    """

    mu12: float
    mu1: float
    mu2: float
    mu_tilde: float
    delta: float


def make_density(mat, shape: BlockShape, tol: float = VALIDATION_TOL) -> DensityMatrix:
    """Validate and wrap a matrix as a density matrix.

    The input is stored as given; nothing is renormalized or repaired.  Use
    :func:`normalize` explicitly when a sweep needs trace repair.
    """
    arr = as_square_matrix(mat).copy()
    if arr.shape[0] != shape.dim:
        raise ShapeMismatch(
            f"matrix dimension {arr.shape[0]} does not match block shape "
            f"({shape.n}, {shape.m}) with n*m = {shape.dim}"
        )
    defect = hermiticity_defect(arr)
    if defect > tol:
        raise NotHermitian(f"hermiticity defect {defect:.3e} exceeds tol {tol:.3e}")
    trace_dev = abs(complex(arr.trace()) - 1.0)
    if trace_dev > tol:
        raise TraceNotOne(f"trace deviates from 1 by {trace_dev:.3e} (tol {tol:.3e})")
    smallest = float(hermitian_eig(arr, tol=tol).values[0])
    if smallest < -tol:
        raise NotPositive(
            f"smallest eigenvalue {smallest:.3e} below -{tol:.3e}"
        )
    arr.flags.writeable = False
    return DensityMatrix(mat=arr, shape=shape, tol=tol)


def _blocks(mat: np.ndarray, shape: BlockShape) -> np.ndarray:
    return mat.reshape(shape.n, shape.m, shape.n, shape.m)


def block_trace_map(mat: np.ndarray, shape: BlockShape) -> np.ndarray:
    """n x n matrix of block traces (trace over the inner index)."""
    return np.einsum("ikjk->ij", _blocks(mat, shape))


def block_sum_map(mat: np.ndarray, shape: BlockShape) -> np.ndarray:
    """m x m sum of the diagonal blocks (trace over the outer index)."""
    return np.einsum("kakb->ab", _blocks(mat, shape))


def partial_transpose_inner(mat: np.ndarray, shape: BlockShape) -> np.ndarray:
    """Transpose within each block (partial transpose over the inner index)."""
    return _blocks(mat, shape).transpose(0, 3, 2, 1).reshape(shape.dim, shape.dim)


def partial_trace_over_2(rho: DensityMatrix) -> DensityMatrix:
    """Reduced n x n state: entries Tr a_ij.  Trace 1 is preserved exactly
    up to arithmetic rounding."""
    reduced = block_trace_map(rho.mat, rho.shape)
    return make_density(reduced, BlockShape(rho.shape.n, 1), tol=rho.tol)


def partial_trace_over_1(rho: DensityMatrix) -> DensityMatrix:
    """Reduced m x m state: the sum of the diagonal blocks."""
    reduced = block_sum_map(rho.mat, rho.shape)
    return make_density(reduced, BlockShape(rho.shape.m, 1), tol=rho.tol)


def purity(rho: DensityMatrix) -> float:
    """Tr rho^2, in [1/N, 1]."""
    return float(np.einsum("ij,ji->", rho.mat, rho.mat).real)


def purity_set(rho: DensityMatrix) -> PuritySet:
    """All four purity scalars of one state, plus delta = mu_tilde - mu12."""
    from .inequalities import mu_tilde as _mu_tilde

    mu12 = purity(rho)
    mu1 = purity(partial_trace_over_2(rho))
    mu2 = purity(partial_trace_over_1(rho))
    mt = _mu_tilde(rho)
    return PuritySet(mu12=mu12, mu1=mu1, mu2=mu2, mu_tilde=mt, delta=mt - mu12)


def normalize(mat) -> np.ndarray:
    """Divide by the trace; explicit repair path for sweep tooling."""
    arr = as_square_matrix(mat)
    tr = complex(arr.trace())
    if abs(tr) == 0.0:
        raise TraceNotOne("cannot normalize a traceless matrix")
    return arr / tr


def ginibre(rows: int, cols: int, gen: SplitMix64) -> np.ndarray:
    """Matrix of independent standard complex normals, drawn row-major."""
    out = np.empty((rows, cols), dtype=np.complex128)
    for i in range(rows):
        for j in range(cols):
            out[i, j] = gen.complex_normal()
    return out


def random_density(dim_n: int, dim_m: int, rank: int, seed: int) -> DensityMatrix:
    """Ginibre-induced random state rho = G G^dagger / Tr(G G^dagger).

    At full rank this samples the Hilbert-Schmidt measure.  Identical seeds
    produce bit-identical matrices.
    """
    shape = BlockShape(dim_n, dim_m)
    if not 1 <= rank <= shape.dim:
        raise BadRank(f"rank must lie in [1, {shape.dim}], got {rank}")
    gen = SplitMix64(seed)
    g = ginibre(shape.dim, rank, gen)
    raw = g @ g.conj().T
    return make_density(raw / raw.trace().real, shape)


def random_separable(dim_n: int, dim_m: int, terms: int, seed: int) -> DensityMatrix:
    """Convex mixture of random pure product states; PPT by construction.

    Weights are exponential draws normalized to 1 (flat Dirichlet); each term
    is kron(u u^dagger, v v^dagger) with u, v normalized complex-normal
    vectors of length n and m, matching the block layout of the package.
    """
    if terms < 1:
        raise BadRank(f"terms must be >= 1, got {terms}")
    shape = BlockShape(dim_n, dim_m)
    gen = SplitMix64(seed)
    weights = np.array([-np.log(gen.uniform()) for _ in range(terms)])
    weights /= weights.sum()
    acc = np.zeros((shape.dim, shape.dim), dtype=np.complex128)
    for w in weights:
        u = np.array([gen.complex_normal() for _ in range(dim_n)])
        u /= np.linalg.norm(u)
        v = np.array([gen.complex_normal() for _ in range(dim_m)])
        v /= np.linalg.norm(v)
        acc += w * np.kron(np.outer(u, u.conj()), np.outer(v, v.conj()))
    return make_density(acc, shape)
