"""Analytic delta formulas, ring sums and infinite-lattice integrals.

These serve two purposes: independent oracles for the general spectral
pipeline on finite graphs, and the only route to infinite lattices.
All formulas are ground-state (T = 0) except :func:`delta_two_vertex`.
"""

from __future__ import annotations

import functools
import math

import numpy as np
from scipy.special import ellipe, ellipk

from .gaussian import EofResult, eof_from_delta
from .quadrature import QuadratureSpec, nested_simpson

__all__ = [
    "QuadratureSpec",
    "delta_two_vertex",
    "delta_path3",
    "delta_meanfield",
    "meanfield_saturation_delta",
    "ring_w_element",
    "lattice_w_integral",
    "lattice_w_elements",
    "eof_infinite_lattice",
    "meanfield_largeN_estimate",
    "fit_largeN_log_base",
    "meanfield_largeN_asymptote",
    "LARGE_N_COEFF",
]

LARGE_N_COEFF = 1.72


def _check_omega(omega) -> float:
    omega = float(omega)
    if not math.isfinite(omega) or omega < 0:
        raise ValueError(f"omega must be finite and >= 0, got {omega}")
    return omega


def _coth(x: float) -> float:
    return 1.0 / math.tanh(x)


def delta_two_vertex(omega: float, beta: float = math.inf) -> float:
    """delta for two modes joined by one spring, at inverse temperature ``beta``."""
    omega = _check_omega(omega)
    beta = float(beta)
    if math.isnan(beta) or beta <= 0:
        raise ValueError(f"beta must be > 0 or inf, got {beta}")
    w2 = math.sqrt(1 + 2 * omega**2)
    if math.isinf(beta):
        return w2**-0.5
    return math.sqrt(_coth(beta / 2) * _coth(beta * w2 / 2) / w2)


def delta_path3(omega: float) -> float:
    """Ground-state delta between the two ends of a three-vertex chain."""
    omega = _check_omega(omega)
    return math.sqrt((2 + math.sqrt(1 + 3 * omega**2)) / (3 * math.sqrt(1 + omega**2)))


def delta_meanfield(n_verts: int, omega: float) -> float:
    """Ground-state delta for any pair of a complete graph on ``n_verts`` vertices."""
    if n_verts < 3:
        raise ValueError(f"n_verts must be >= 3, got {n_verts}")
    omega = _check_omega(omega)
    root = math.sqrt(1 + n_verts * omega**2)
    return math.sqrt((2 + (n_verts - 2) * root) / (n_verts * root))


def meanfield_saturation_delta(n_verts: int) -> float:
    """omega -> infinity limit of :func:`delta_meanfield`."""
    if n_verts < 3:
        raise ValueError(f"n_verts must be >= 3, got {n_verts}")
    return math.sqrt((n_verts - 2) / n_verts)


def _check_power(power):
    if power not in (1, -1):
        raise ValueError(f"power must be +1 or -1, got {power}")


def ring_w_element(n_verts: int, omega: float, offset: int, power: int) -> float:
    """Entry ``(k, k + offset)`` of ``W**power`` for a ring of ``n_verts`` sites.

    Uses the plane-wave eigenbasis; the sum carries the ``1/N`` that makes
    ``W @ W^-1 = I`` hold.
    """
    if n_verts < 3:
        raise ValueError(f"n_verts must be >= 3, got {n_verts}")
    if not 0 <= offset < n_verts:
        raise ValueError(f"offset must lie in [0, {n_verts}), got {offset}")
    _check_power(power)
    omega = _check_omega(omega)
    s = np.arange(n_verts)
    lam = 1 + 4 * omega**2 * np.sin(np.pi * s / n_verts) ** 2
    return float(np.mean(lam ** (0.5 * power) * np.cos(2 * np.pi * s * offset / n_verts)))


def _lattice_integrand(d: int, omega: float, columns):
    """Integrand for the mean of ``lam**(power/2) * (cos 2x_0 if offset)``.

    ``lam = 1 + 4 omega**2 sum_k sin(x_k)**2``; every coordinate ranges over
    ``[0, pi/2]`` (the integrand is symmetric about ``pi/2``).  For ``d >= 2``
    the last coordinate carries no cosine and is averaged exactly:

        mean_z (c + b sin^2 z)**-1/2 = (2/pi) K(-b/c) / sqrt(c)
        mean_z (c + b sin^2 z)**+1/2 = (2/pi) E(-b/c) sqrt(c)

    so the returned function takes ``d - 1`` coordinates.  ``columns`` lists
    ``(power, offset)`` pairs.
    """
    four_w2 = 4 * omega**2

    def f(x):
        lam = 1 + four_w2 * np.sum(np.sin(x) ** 2, axis=1)
        if d == 1:
            root = np.sqrt(lam)
            plus, minus = root, 1 / root
        else:
            m = -four_w2 / lam
            root = np.sqrt(lam)
            plus = (2 / np.pi) * ellipe(m) * root
            minus = (2 / np.pi) * ellipk(m) / root
        cos2 = np.cos(2 * x[:, 0])
        out = np.empty((x.shape[0], len(columns)))
        for k, (power, offset) in enumerate(columns):
            val = plus if power == 1 else minus
            out[:, k] = val * cos2 if offset else val
        return out

    return f


def _lattice_quadrature(d, omega, columns, q):
    f = _lattice_integrand(d, omega, columns)
    axes = max(d - 1, 1)
    return nested_simpson(f, [(0.0, math.pi / 2)] * axes, q.axis_tol, q.max_depth)


def _resolve_spec(d, q):
    if q is None:
        return QuadratureSpec(dims=d)
    if q.dims != d:
        raise ValueError(f"quadrature spec is for d={q.dims}, requested d={d}")
    return q


def lattice_w_integral(d: int, omega: float, offset_axis0: int, power: int, q: QuadratureSpec | None = None) -> float:
    """Entry of ``W**power`` on the infinite periodic ``d``-dimensional lattice.

    ``offset_axis0 = 0`` gives the diagonal, ``1`` the nearest-neighbour entry.
    """
    if offset_axis0 not in (0, 1):
        raise ValueError(f"offset_axis0 must be 0 or 1, got {offset_axis0}")
    _check_power(power)
    q = _resolve_spec(d, q)
    omega = _check_omega(omega)
    return float(_lattice_quadrature(d, omega, [(power, offset_axis0)], q)[0])


def lattice_w_elements(d: int, omega: float, q: QuadratureSpec | None = None) -> dict[str, float]:
    """All four entries needed for delta, from a single nested quadrature pass.

    Keys: ``winv11``, ``winv12``, ``w11``, ``w12``.
    """
    q = _resolve_spec(d, q)
    omega = _check_omega(omega)
    cols = [(-1, 0), (-1, 1), (1, 0), (1, 1)]
    vals = _lattice_quadrature(d, omega, cols, q)
    return dict(zip(("winv11", "winv12", "w11", "w12"), map(float, vals)))


def eof_infinite_lattice(d: int, omega: float, q: QuadratureSpec | None = None) -> EofResult:
    """Ground-state EoF between adjacent sites of the infinite ``d``-dimensional lattice."""
    e = lattice_w_elements(d, omega, q)
    delta = math.sqrt((e["winv11"] - e["winv12"]) * (e["w11"] + e["w12"]))
    return eof_from_delta(delta)


def meanfield_largeN_estimate(n_verts: int, log_base: float | None = None) -> float:
    """Large-N estimate ``1.72 log_b(N) / (2 N**2)`` of saturated mean-field EoF (ebits).

    ``log_base=None`` uses :func:`fit_largeN_log_base`.  The product form only
    tracks the exact values to within ~10% for N of a few hundred; see
    :func:`meanfield_largeN_asymptote` for the form that converges.
    """
    if n_verts < 50:
        raise ValueError(f"estimate is only meaningful for n_verts >= 50, got {n_verts}")
    if log_base is None:
        log_base = fit_largeN_log_base()
    if not log_base > 1:
        raise ValueError(f"log_base must be > 1, got {log_base}")
    return LARGE_N_COEFF * math.log(n_verts, log_base) / (2 * n_verts**2)


@functools.lru_cache(maxsize=None)
def fit_largeN_log_base(sizes: tuple[int, ...] = (50, 100, 200)) -> float:
    """Least-squares base ``b`` making the estimate match exact saturated EoF.

    With ``L = ln b`` the estimate is ``1.72 ln N / (2 N**2 L)``; fitting
    ``1 / L`` linearly against the exact values gives a closed form.
    """
    x = np.array([LARGE_N_COEFF * math.log(n) / (2 * n**2) for n in sizes])
    y = np.array([eof_from_delta(meanfield_saturation_delta(n)).eof for n in sizes])
    inv_log = float(x @ y / (x @ x))
    return math.exp(1 / inv_log)


def meanfield_largeN_asymptote(n_verts: int) -> float:
    """Leading large-N behaviour ``(log2 N + 1 + 1/(2 ln 2)) / (2 N**2)``.

    Follows from expanding the EoF at ``delta**2 = 1 - 2/N``:
    ``C- ~ 1/(4N^2)`` and ``C+ log2 C+ ~ C- / ln 2``.  The constant
    ``1 + 1/(2 ln 2)`` is 1.7213.
    """
    if n_verts < 3:
        raise ValueError(f"n_verts must be >= 3, got {n_verts}")
    return (math.log2(n_verts) + 1 + 0.5 / math.log(2)) / (2 * n_verts**2)
