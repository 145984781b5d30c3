"""Thermal and ground-state covariance matrices, two-mode reduction and EoF.

Conventions: the vacuum has covariance ``I``; ``beta = math.inf`` means the
ground state and is handled exactly, never through a large finite beta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    AsymmetricPair,
    InfiniteEntanglement,
    NegativeDiscriminant,
    NotEntangledAtZero,
    NumericalError,
)
from .graphs import Graph
from .spectral import PotentialMatrix, Spectrum, apply_spectral_function, eig_sym, potential_matrix

__all__ = [
    "CovariancePair",
    "TwoModeForm",
    "EofResult",
    "covariance",
    "reduce_pair",
    "delta_of",
    "eof_from_delta",
    "eof_pair",
    "delta_pair",
    "threshold_temperature",
    "DEFAULT_SYM_TOL",
]

DEFAULT_SYM_TOL = 1e-8


@dataclass(frozen=True)
class CovariancePair:
    gx: np.ndarray
    gp: np.ndarray
    beta: float


@dataclass(frozen=True)
class TwoModeForm:
    """Reduced covariance of a symmetric mode pair.

    ``n_x, n_p, m_x, m_p`` are the (averaged, gauge-fixed) raw entries;
    ``n, k_x, k_p`` the standard form after the ``x -> alpha x, p -> p / alpha``
    rescaling.
    """

    n_x: float
    n_p: float
    m_x: float
    m_p: float
    n: float
    k_x: float
    k_p: float

    @classmethod
    def from_raw(cls, n_x, n_p, m_x, m_p) -> "TwoModeForm":
        ratio = math.sqrt(n_p / n_x)
        return cls(n_x, n_p, m_x, m_p, math.sqrt(n_x * n_p), m_x * ratio, m_p / ratio)

    @property
    def alpha(self) -> float:
        return (self.n_p / self.n_x) ** 0.25


@dataclass(frozen=True)
class EofResult:
    delta: float
    big_delta: float
    c_plus: float
    c_minus: float
    eof: float

    @property
    def centi_ebits(self) -> float:
        return 100.0 * self.eof


def _check_beta(beta) -> float:
    beta = float(beta)
    if math.isnan(beta) or beta <= 0:
        raise ValueError(f"beta must be > 0 or inf, got {beta}")
    return beta


def _coth_factor(freq: np.ndarray, beta: float) -> np.ndarray:
    if math.isinf(beta):
        return np.ones_like(freq)
    return 1.0 / np.tanh(0.5 * beta * freq)


def covariance(v: PotentialMatrix, beta: float = math.inf, spectrum: Spectrum | None = None) -> CovariancePair:
    """Position and momentum covariance blocks of the Gibbs state at inverse temperature ``beta``.

    ``Gx = W^-1 coth(beta W / 2)`` and ``Gp = W coth(beta W / 2)`` with ``W = V^(1/2)``.
    A precomputed ``spectrum`` of ``v.v`` may be passed to skip the eigensolve.
    """
    beta = _check_beta(beta)
    s = spectrum if spectrum is not None else eig_sym(v.v)
    if s.eigenvalues[0] <= 0:
        raise ValueError("potential matrix is not positive definite")

    def gx(lam):
        w = np.sqrt(lam)
        return _coth_factor(w, beta) / w

    def gp(lam):
        w = np.sqrt(lam)
        return w * _coth_factor(w, beta)

    return CovariancePair(apply_spectral_function(s, gx), apply_spectral_function(s, gp), beta)


def reduce_pair(c: CovariancePair, i: int, j: int, sym_tol: float = DEFAULT_SYM_TOL) -> TwoModeForm:
    """Extract the two-mode block for modes ``i`` and ``j`` in standard form.

    Raises :class:`AsymmetricPair` if the diagonal entries differ by more than
    ``sym_tol`` relative, i.e. the modes are not interchangeable.
    """
    n = c.gx.shape[0]
    if i == j:
        raise ValueError("pair must consist of two distinct modes")
    for v in (i, j):
        if not 0 <= v < n:
            raise ValueError(f"mode {v} out of range for {n} modes")

    for block, label in ((c.gx, "position"), (c.gp, "momentum")):
        a, b = block[i, i], block[j, j]
        if abs(a - b) > sym_tol * abs(a):
            raise AsymmetricPair(
                f"modes {i} and {j} are not symmetric: {label} variances {a:.12g} vs {b:.12g}"
            )

    n_x = 0.5 * (c.gx[i, i] + c.gx[j, j])
    n_p = 0.5 * (c.gp[i, i] + c.gp[j, j])
    m_x = 0.5 * (c.gx[i, j] + c.gx[j, i])
    m_p = 0.5 * (c.gp[i, j] + c.gp[j, i])
    # x_j -> -x_j, p_j -> -p_j is symplectic and flips both correlations
    if m_x < 0:
        m_x, m_p = -m_x, -m_p
    return TwoModeForm.from_raw(float(n_x), float(n_p), float(m_x), float(m_p))


def delta_of(t: TwoModeForm) -> float:
    prod = (t.n_x - t.m_x) * (t.n_p + t.m_p)
    if prod < 0:
        raise NegativeDiscriminant(f"(n_x - m_x)(n_p + m_p) = {prod:.6g} < 0")
    return math.sqrt(prod)


def eof_from_delta(delta: float) -> EofResult:
    """Entanglement of formation (ebits) of a symmetric two-mode Gaussian state."""
    delta = float(delta)
    if not math.isfinite(delta) or delta < 0:
        raise ValueError(f"delta must be finite and >= 0, got {delta}")
    if delta == 0:
        raise InfiniteEntanglement("delta = 0: entanglement of formation diverges")
    if delta >= 1:
        return EofResult(delta, 1.0, 1.0, 0.0, 0.0)
    c_plus = (1 + delta) ** 2 / (4 * delta)
    c_minus = (1 - delta) ** 2 / (4 * delta)
    eof = c_plus * math.log2(c_plus) - c_minus * math.log2(c_minus)
    return EofResult(delta, delta, c_plus, c_minus, max(eof, 0.0))


def delta_pair(
    g: Graph,
    omega: float,
    beta: float,
    i: int,
    j: int,
    sym_tol: float = DEFAULT_SYM_TOL,
    spectrum: Spectrum | None = None,
) -> float:
    v = potential_matrix(g, omega)
    return delta_of(reduce_pair(covariance(v, beta, spectrum), i, j, sym_tol))


def eof_pair(
    g: Graph,
    omega: float,
    beta: float,
    i: int,
    j: int,
    sym_tol: float = DEFAULT_SYM_TOL,
) -> EofResult:
    """Potential matrix -> covariance -> reduced pair -> delta -> EoF."""
    return eof_from_delta(delta_pair(g, omega, beta, i, j, sym_tol))


def threshold_temperature(
    g: Graph,
    omega: float,
    i: int,
    j: int,
    sym_tol: float = DEFAULT_SYM_TOL,
    bracket: tuple[float, float] = (1e-6, 1e3),
    max_iter: int = 200,
) -> float:
    """Temperature above which the pair ``(i, j)`` becomes separable.

    Bisection on ``delta(T) = 1``; the returned ``T*`` is the upper end of the
    final bracket, so ``delta(T*) >= 1``.
    """
    v = potential_matrix(g, omega)
    s = eig_sym(v.v)

    def delta_at(t):
        beta = math.inf if t == 0 else 1.0 / t
        return delta_of(reduce_pair(covariance(v, beta, s), i, j, sym_tol))

    if delta_at(0) >= 1:
        raise NotEntangledAtZero(f"pair ({i}, {j}) is separable in the ground state")

    lo, hi = bracket
    while delta_at(lo) >= 1:
        lo *= 1e-3
        if lo < 1e-300:
            raise NumericalError("could not bracket the threshold temperature from below")
    while delta_at(hi) < 1:
        hi *= 2.0
        if hi > 1e300:
            raise NumericalError("could not bracket the threshold temperature from above")

    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if delta_at(mid) < 1:
            lo = mid
        else:
            hi = mid

    if abs(delta_at(hi) - 1) > 1e-9:
        raise NumericalError(f"bisection did not converge: delta(T*) = {delta_at(hi)!r}")
    return hi
