"""Adaptive Simpson quadrature with an absolute error target."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np


class ToleranceNotReached(ArithmeticError):
    """Raised when the refinement depth runs out before the tolerance is met."""


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-12
    max_depth: int = 60

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_depth < 1:
            raise ValueError("max_depth must be positive")


def adaptive_simpson(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    abs_tol: float = 1e-12,
    max_depth: int = 60,
) -> float:
    """Integrate a vectorised ``f`` over [a, b].

    Classic adaptive Simpson (split until |S_left + S_right - S| <= 15 tol,
    halving tol per split, Richardson-corrected), processed one refinement
    level at a time so every level is a single vectorised call of ``f``.
    """
    lo = np.array([a], dtype=float)
    hi = np.array([b], dtype=float)
    mid = (lo + hi) / 2
    fl, fm, fh = f(lo), f(mid), f(hi)
    whole = (hi - lo) / 6 * (fl + 4 * fm + fh)
    tol = abs_tol
    total = 0.0
    for _ in range(max_depth):
        lm = (lo + mid) / 2
        rm = (mid + hi) / 2
        flm, frm = f(lm), f(rm)
        left = (mid - lo) / 6 * (fl + 4 * flm + fm)
        right = (hi - mid) / 6 * (fm + 4 * frm + fh)
        delta = left + right - whole
        done = np.abs(delta) <= 15 * tol
        total += float(np.sum((left + right + delta / 15)[done]))
        keep = ~done
        if not keep.any():
            return total
        tol /= 2
        # children of the unfinished intervals
        lo, mid, hi = (
            np.concatenate([lo[keep], mid[keep]]),
            np.concatenate([lm[keep], rm[keep]]),
            np.concatenate([mid[keep], hi[keep]]),
        )
        fl, fm, fh = (
            np.concatenate([fl[keep], fm[keep]]),
            np.concatenate([flm[keep], frm[keep]]),
            np.concatenate([fm[keep], fh[keep]]),
        )
        whole = np.concatenate([left[keep], right[keep]])
    raise ToleranceNotReached(f"no convergence to {abs_tol:g} within depth {max_depth}")
