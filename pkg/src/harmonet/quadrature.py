"""Nested adaptive Simpson quadrature over boxes, vectorised with numpy.

Each axis is integrated by an adaptive Simpson rule.  Instead of recursing one
point at a time, every level keeps a work list of open panels for *all* outer
points at once and evaluates the next level for the whole batch in one call,
so the number of Python-level iterations grows with the recursion depth only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import ToleranceNotReached

__all__ = ["QuadratureSpec", "nested_simpson"]

_INITIAL_PANELS = 4
# outer points handed to an inner level per call; bounds peak memory
_CHUNK = 2048


@dataclass(frozen=True)
class QuadratureSpec:
    dims: int
    abs_tol: float = 1e-7
    max_depth: int = 50

    def __post_init__(self):
        if self.dims not in (1, 2, 3):
            raise ValueError(f"dims must be 1, 2 or 3, got {self.dims}")
        if not self.abs_tol > 0:
            raise ValueError(f"abs_tol must be > 0, got {self.abs_tol}")
        if self.max_depth < 10:
            raise ValueError(f"max_depth must be >= 10, got {self.max_depth}")

    @property
    def axis_tol(self) -> float:
        return self.abs_tol / 3 ** (self.dims - 1)


def _simpson_axis(fn, prefix: np.ndarray, tol: float, max_depth: int) -> np.ndarray:
    """Mean over ``u in [0, 1]`` of ``fn([prefix, u])`` for every row of ``prefix``.

    ``fn`` maps an ``(M, k + 1)`` array of points to ``(M, c)`` values.
    Returns an ``(m, c)`` array.
    """
    m = prefix.shape[0]

    def call(owner, u):
        return fn(np.column_stack([prefix[owner], u]))

    # initial panels [j/P, (j+1)/P] sampled at ends and midpoints
    grid = np.linspace(0.0, 1.0, 2 * _INITIAL_PANELS + 1)
    f0 = call(np.repeat(np.arange(m), grid.size), np.tile(grid, m))
    c = f0.shape[1]
    f0 = f0.reshape(m, grid.size, c)

    owner = np.repeat(np.arange(m), _INITIAL_PANELS)
    a = np.tile(grid[0:-1:2], m)
    b = np.tile(grid[2::2], m)
    fa = f0[:, 0:-1:2].reshape(-1, c)
    fm = f0[:, 1::2].reshape(-1, c)
    fb = f0[:, 2::2].reshape(-1, c)
    whole = (b - a)[:, None] / 6 * (fa + 4 * fm + fb)
    ptol = np.full(owner.size, tol / _INITIAL_PANELS)
    depth = 0

    result = np.zeros((m, c))
    while owner.size:
        h = b - a
        mid = a + 0.5 * h
        fq = call(np.concatenate([owner, owner]), np.concatenate([a + 0.25 * h, a + 0.75 * h]))
        flm, frm = fq[: owner.size], fq[owner.size :]
        left = (h / 12)[:, None] * (fa + 4 * flm + fm)
        right = (h / 12)[:, None] * (fm + 4 * frm + fb)
        diff = left + right - whole
        done = np.all(np.abs(diff) <= 15 * ptol[:, None], axis=1)
        np.add.at(result, owner[done], (left + right + diff / 15)[done])

        keep = ~done
        if not keep.any():
            break
        depth += 1
        if depth >= max_depth:
            worst = float(np.max(np.abs(diff[keep])) / 15)
            raise ToleranceNotReached(
                f"recursion depth {max_depth} reached with local error {worst:.3g} (tol {tol:.3g})"
            )
        a, mid, b = a[keep], mid[keep], b[keep]
        fa, flm, fm, frm, fb = fa[keep], flm[keep], fm[keep], frm[keep], fb[keep]
        owner = np.concatenate([owner[keep], owner[keep]])
        a, b = np.concatenate([a, mid]), np.concatenate([mid, b])
        fa, fm, fb = np.concatenate([fa, fm]), np.concatenate([flm, frm]), np.concatenate([fm, fb])
        whole = np.concatenate([left[keep], right[keep]])
        half = 0.5 * ptol[keep]
        ptol = np.concatenate([half, half])
    return result


def nested_simpson(
    integrand: Callable[[np.ndarray], np.ndarray],
    bounds: Sequence[tuple[float, float]],
    abs_tol: float,
    max_depth: int = 50,
) -> np.ndarray:
    """Mean value of a vector-valued integrand over a box.

    ``integrand`` takes an ``(M, d)`` array of points and returns ``(M, c)``.
    Each axis is integrated to ``abs_tol`` on the mean, which bounds the total
    error by roughly ``d * abs_tol``.  Returns a length-``c`` array.
    """
    lo = np.array([b[0] for b in bounds], dtype=float)
    span = np.array([b[1] - b[0] for b in bounds], dtype=float)
    d = lo.size

    def level(k):
        if k == d - 1:
            return lambda u: integrand(lo + span * u)
        inner = level(k + 1)

        def integrate_inner(u):
            parts = [_simpson_axis(inner, u[s : s + _CHUNK], abs_tol, max_depth) for s in range(0, len(u), _CHUNK)]
            return np.concatenate(parts)

        return integrate_inner

    return _simpson_axis(level(0), np.empty((1, 0)), abs_tol, max_depth)[0]
