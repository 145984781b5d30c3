"""Symmetric eigendecomposition and spectral matrix functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .graphs import Graph

__all__ = [
    "Spectrum",
    "PotentialMatrix",
    "laplacian",
    "potential_matrix",
    "eig_sym",
    "apply_spectral_function",
    "w_pair",
]

SYMMETRY_RTOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Ascending eigenvalues; column ``k`` of ``eigenvectors`` belongs to ``eigenvalues[k]``."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return apply_spectral_function(self, lambda lam: lam)


@dataclass(frozen=True)
class PotentialMatrix:
    v: np.ndarray
    omega: float
    graph: Graph | None = None


def laplacian(g: Graph) -> np.ndarray:
    return np.diag(g.degrees) - g.adjacency


def potential_matrix(g: Graph, omega: float) -> PotentialMatrix:
    """Quadratic form of the trapped, spring-coupled system: ``I + omega**2 L``.

    For a graph of uniform degree ``z`` this is ``(1 + z omega**2) I - omega**2 A``;
    path endpoints simply get the smaller diagonal ``1 + omega**2``.
    """
    omega = float(omega)
    if not np.isfinite(omega) or omega < 0:
        raise ValueError(f"omega must be finite and >= 0, got {omega}")
    v = np.eye(g.n) + omega**2 * laplacian(g)
    v.setflags(write=False)
    return PotentialMatrix(v, omega, g)


def eig_sym(m) -> Spectrum:
    """Eigendecomposition of a real symmetric matrix (LAPACK ``syevd`` via numpy)."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, float(np.max(np.abs(m), initial=0.0)))
    if np.max(np.abs(m - m.T), initial=0.0) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    # eigh only reads one triangle; symmetrize so both triangles count equally
    lam, q = np.linalg.eigh(0.5 * (m + m.T))
    return Spectrum(lam, q)


def apply_spectral_function(s: Spectrum, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Return ``sum_k f(lambda_k) q_k q_k^T``.

    ``f`` is called once with the whole eigenvalue array and must act elementwise.
    """
    values = np.asarray(f(s.eigenvalues), dtype=float)
    if values.shape != s.eigenvalues.shape:
        values = np.broadcast_to(values, s.eigenvalues.shape)
    if not np.all(np.isfinite(values)):
        raise ValueError("spectral function is not finite on the spectrum")
    q = s.eigenvectors
    out = (q * values) @ q.T
    return 0.5 * (out + out.T)


def w_pair(v: PotentialMatrix | np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Square root ``W`` of the potential matrix and its inverse."""
    m = v.v if isinstance(v, PotentialMatrix) else v
    s = eig_sym(m)
    if s.eigenvalues[0] <= 0:
        raise ValueError("potential matrix is not positive definite")
    return apply_spectral_function(s, np.sqrt), apply_spectral_function(s, lambda x: 1 / np.sqrt(x))
