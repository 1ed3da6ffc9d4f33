"""The 4x4 X-state family, its one-parameter specializations and
entanglement verdicts.

An X-state has nonzero entries only on the diagonal and anti-diagonal:

        [ d1   0    0   c14 ]
        [ 0    d2  c23   0  ]
        [ 0   c23*  d3   0  ]
        [c14*  0    0   d4  ]

with d1..d4 nonnegative summing to 1, and it is positive iff
d2*d3 >= |c23|^2 and d1*d4 >= |c14|^2.  Under the 2x2 block convention of
this package the state is entangled iff one coherence beats the geometric
mean of the *other* pair of populations: |c14|^2 > d2*d3 or
|c23|^2 > d1*d4 (at most one of the two can hold).

Closed-form purities for the family:

    mu12 = sum d_i^2 + 2(|c14|^2 + |c23|^2)
    mu1  = sum d_i^2 + 2(d1 d2 + d3 d4)
    mu2  = sum d_i^2 + 2(d1 d3 + d2 d4)
    mu_tilde = 2 sqrt(d1^2+d2^2+K) sqrt(d3^2+d4^2+K)
             + 2 sqrt(d1^2+d3^2+K) sqrt(d2^2+d4^2+K)
             + 2 sum d_i^2 + 4K - 1,     K = |c14|^2 + |c23|^2
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .defaults import ENTANGLE_TOL, GISIN_NORM_SLACK, REPORT_TOL, VALIDATION_TOL
from .density import (
    BlockShape,
    DensityMatrix,
    PuritySet,
    make_density,
    partial_transpose_inner,
)
from .errors import DomainError, NotPositive, ShapeUnsupported, TraceNotOne
from .inequalities import LEQ_EXPECTED, InequalityReport, _report
from .linalg import hermitian_eig
from .prng import SplitMix64

TWO_QUBIT_SHAPE = BlockShape(2, 2)


@dataclass(frozen=True)
class XStateParams:
    """Defining parameters of an X-state; validated on construction."""

    d1: float
    d2: float
    d3: float
    d4: float
    c14: complex = 0.0
    c23: complex = 0.0

    def __post_init__(self):
        diag = (self.d1, self.d2, self.d3, self.d4)
        if min(diag) < 0.0:
            raise NotPositive(f"diagonal entries must be nonnegative, got {diag}")
        total = sum(diag)
        if abs(total - 1.0) > 1e-12:
            raise TraceNotOne(f"diagonal sums to {total!r}, off by {abs(total-1.0):.3e}")
        if self.d2 * self.d3 < abs(self.c23) ** 2 - 1e-12:
            raise NotPositive(
                f"d2*d3 = {self.d2 * self.d3:.6e} < |c23|^2 = {abs(self.c23)**2:.6e}"
            )
        if self.d1 * self.d4 < abs(self.c14) ** 2 - 1e-12:
            raise NotPositive(
                f"d1*d4 = {self.d1 * self.d4:.6e} < |c14|^2 = {abs(self.c14)**2:.6e}"
            )

    @property
    def diag(self) -> tuple[float, float, float, float]:
        return (self.d1, self.d2, self.d3, self.d4)


@dataclass(frozen=True)
class WernerParam:
    p: float

    def __post_init__(self):
        if not -1.0 / 3.0 <= self.p <= 1.0:
            raise DomainError(f"Werner parameter must lie in [-1/3, 1], got {self.p}")


@dataclass(frozen=True)
class GisinParams:
    """Mixing weight x in (0, 1) and amplitudes a, b with |a|^2+|b|^2 = 1.

    ``slack`` bounds the allowed normalization defect; the published
    {0.07, 0.99} parameter set misses normalization by 1.5% and is accepted
    as-is (raw values are kept, nothing is renormalized) so that x_max comes
    out of the raw product |a b|.
    """

    x: float
    a: complex
    b: complex
    slack: float = GISIN_NORM_SLACK

    def __post_init__(self):
        if not 0.0 < self.x < 1.0:
            raise DomainError(f"Gisin x must lie in (0, 1), got {self.x}")
        defect = abs(abs(self.a) ** 2 + abs(self.b) ** 2 - 1.0)
        if defect > self.slack:
            raise DomainError(
                f"|a|^2+|b|^2 deviates from 1 by {defect:.4f}, "
                f"beyond slack {self.slack}"
            )


@dataclass(frozen=True)
class BetaParam:
    beta: float

    def __post_init__(self):
        if not 0.0 <= self.beta <= 1.0:
            raise DomainError(f"beta must lie in [0, 1], got {self.beta}")


def x_state_matrix(params: XStateParams) -> np.ndarray:
    mat = np.zeros((4, 4), dtype=np.complex128)
    mat[0, 0], mat[1, 1], mat[2, 2], mat[3, 3] = params.diag
    mat[0, 3] = params.c14
    mat[3, 0] = np.conj(params.c14)
    mat[1, 2] = params.c23
    mat[2, 1] = np.conj(params.c23)
    return mat


def x_state(params: XStateParams, tol: float = VALIDATION_TOL) -> DensityMatrix:
    return make_density(x_state_matrix(params), TWO_QUBIT_SHAPE, tol=tol)


def x_state_purities(params: XStateParams) -> PuritySet:
    """Closed-form purity set; matches the generic pipeline to ~1e-12."""
    d1, d2, d3, d4 = params.diag
    k = abs(params.c14) ** 2 + abs(params.c23) ** 2
    sq = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4
    mu12 = sq + 2.0 * k
    mu1 = sq + 2.0 * (d1 * d2 + d3 * d4)
    mu2 = sq + 2.0 * (d1 * d3 + d2 * d4)
    mt = (
        2.0 * math.sqrt(d1 * d1 + d2 * d2 + k) * math.sqrt(d3 * d3 + d4 * d4 + k)
        + 2.0 * math.sqrt(d1 * d1 + d3 * d3 + k) * math.sqrt(d2 * d2 + d4 * d4 + k)
        + 2.0 * sq + 4.0 * k - 1.0
    )
    return PuritySet(mu12=mu12, mu1=mu1, mu2=mu2, mu_tilde=mt, delta=mt - mu12)


def check_eq11(params: XStateParams, tol: float = REPORT_TOL) -> InequalityReport:
    """X-state specialization of the purity inequality (lhs as displayed:
    2 sum d_i^2 + 2(d1+d4)(d2+d3) - 1, rhs = mu12)."""
    d1, d2, d3, d4 = params.diag
    sq = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4
    lhs = 2.0 * sq + 2.0 * (d1 + d4) * (d2 + d3) - 1.0
    rhs = sq + 2.0 * (abs(params.c14) ** 2 + abs(params.c23) ** 2)
    return _report("eq11", lhs, rhs, LEQ_EXPECTED, tol)


def check_eq12(params: XStateParams, tol: float = REPORT_TOL) -> InequalityReport:
    """Same lhs as check_eq11 against the closed-form mu_tilde."""
    d1, d2, d3, d4 = params.diag
    sq = d1 * d1 + d2 * d2 + d3 * d3 + d4 * d4
    lhs = 2.0 * sq + 2.0 * (d1 + d4) * (d2 + d3) - 1.0
    return _report("eq12", lhs, x_state_purities(params).mu_tilde, LEQ_EXPECTED, tol)


def werner_params(p: float | WernerParam) -> XStateParams:
    wp = p if isinstance(p, WernerParam) else WernerParam(float(p))
    outer = (1.0 + wp.p) / 4.0
    inner = (1.0 - wp.p) / 4.0
    return XStateParams(d1=outer, d2=inner, d3=inner, d4=outer, c14=wp.p / 2.0)


def werner_state(p: float | WernerParam, tol: float = VALIDATION_TOL) -> DensityMatrix:
    return x_state(werner_params(p), tol=tol)


def gisin_x_max(g_or_a: GisinParams | complex, b: complex | None = None) -> float:
    """Separability threshold 1/(1 + 2|ab|), from the raw amplitudes."""
    if isinstance(g_or_a, GisinParams):
        a, b = g_or_a.a, g_or_a.b
    else:
        a = g_or_a
    return 1.0 / (1.0 + 2.0 * abs(a * b))


def gisin_matrix(g: GisinParams) -> np.ndarray:
    mat = np.zeros((4, 4), dtype=np.complex128)
    mat[0, 0] = mat[3, 3] = (1.0 - g.x) / 2.0
    mat[1, 1] = g.x * abs(g.a) ** 2
    mat[2, 2] = g.x * abs(g.b) ** 2
    mat[1, 2] = g.x * g.a * np.conj(g.b)
    mat[2, 1] = np.conj(mat[1, 2])
    return mat


def gisin_state(g: GisinParams, tol: float = VALIDATION_TOL) -> DensityMatrix:
    """Construct the Gisin state; fails NotPositive beyond x_max.

    States with x > x_max are rejected here (the constructor enforces the
    family's validity threshold); matrices in that regime can still be
    built directly and validated with make_density for partial-transpose
    studies.  Raw non-normalized amplitudes surface as TraceNotOne.
    """
    x_max = gisin_x_max(g)
    if g.x > x_max + tol:
        raise NotPositive(f"x = {g.x} exceeds x_max = {x_max:.6f}")
    return make_density(gisin_matrix(g), TWO_QUBIT_SHAPE, tol=tol)


def gisin_closed_forms(g: GisinParams) -> tuple[float, float, float]:
    """(lhs5, mu_tilde, mu12) from the family's closed forms, defined for any x."""
    return _gisin_closed(g.x, abs(g.a) ** 2, abs(g.b) ** 2)


def _gisin_closed(x: float, a2: float, b2: float) -> tuple[float, float, float]:
    lhs5 = x * x * (2.0 * (a2 * a2 + b2 * b2) - 1.0)
    mt = x * (3.0 * x - 2.0) + math.sqrt(x * x * (4.0 * a2 + 1.0) - 2.0 * x + 1.0) \
        * math.sqrt(x * x * (4.0 * b2 + 1.0) - 2.0 * x + 1.0)
    mu12 = 1.5 * x * x - x + 0.5
    return lhs5, mt, mu12


def beta_params(beta: float | BetaParam) -> XStateParams:
    bp = beta if isinstance(beta, BetaParam) else BetaParam(float(beta))
    outer = bp.beta / 2.0
    inner = (1.0 - bp.beta) / 2.0
    return XStateParams(d1=outer, d2=inner, d3=inner, d4=outer,
                        c14=outer, c23=inner)


def beta_state(beta: float | BetaParam, tol: float = VALIDATION_TOL) -> DensityMatrix:
    return x_state(beta_params(beta), tol=tol)


def xstate_entangled(params: XStateParams, tol: float = ENTANGLE_TOL) -> bool:
    """Exact entanglement verdict for X-states; boundary cases count as
    separable."""
    return (
        abs(params.c14) ** 2 > params.d2 * params.d3 + tol
        or abs(params.c23) ** 2 > params.d1 * params.d4 + tol
    )


_PPT_CONCLUSIVE = {(2, 2), (2, 3), (3, 2)}


def ppt_entangled(rho: DensityMatrix, tol: float = ENTANGLE_TOL) -> bool:
    """Peres-Horodecki test: negative partial transpose means entangled.

    Conclusive (necessary and sufficient) only for 2x2 and 2x3 systems; any
    other block shape raises ShapeUnsupported since a PSD partial transpose
    would prove nothing there.
    """
    shape = (rho.shape.n, rho.shape.m)
    if shape not in _PPT_CONCLUSIVE:
        raise ShapeUnsupported(
            f"PPT verdict is conclusive only for {sorted(_PPT_CONCLUSIVE)}, "
            f"got {shape}"
        )
    transposed = partial_transpose_inner(rho.mat, rho.shape)
    smallest = float(hermitian_eig(transposed, tol=rho.tol).values[0])
    return smallest < -tol


def random_x_params(seed: int) -> XStateParams:
    """Random valid X-state parameters from the packaged stream.

    Diagonal: four exponential draws normalized to 1.  Each coherence picks
    a magnitude uniformly inside its positivity bound and a uniform phase:
    |c14| = u * sqrt(d1 d4) with u in (0, 1], likewise for c23.
    """
    gen = SplitMix64(seed)
    raw = [-math.log(gen.uniform()) for _ in range(4)]
    total = sum(raw)
    d1, d2, d3, d4 = (r / total for r in raw)
    mag14 = gen.uniform() * math.sqrt(d1 * d4)
    ph14 = 2.0 * math.pi * gen.uniform()
    mag23 = gen.uniform() * math.sqrt(d2 * d3)
    ph23 = 2.0 * math.pi * gen.uniform()
    return XStateParams(
        d1=d1, d2=d2, d3=d3, d4=d4,
        c14=mag14 * complex(math.cos(ph14), math.sin(ph14)),
        c23=mag23 * complex(math.cos(ph23), math.sin(ph23)),
    )
