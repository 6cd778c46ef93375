"""The inverse of y = (2x - 1) e^(2x) + 1 on x >= 0.

Every capacity formula in this package is expressed through this inverse, so
it gets a dedicated surface with strict domain checks. The map is strictly
increasing (derivative 4x e^(2x)) with forward_map(0) = 0, so the inverse is
single valued on [0, inf). All functions here are pure and reentrant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import backend

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOLERANCE",
    "forward_map",
    "w0",
    "forward_map_grid",
    "w0_grid",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Residual tolerance and iteration cap for the iterative solvers."""

    rel_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not 0.0 < self.rel_tol <= 1e-6:
            raise ValueError(f"rel_tol must be in (0, 1e-6], got {self.rel_tol!r}")
        if self.max_iter < 10:
            raise ValueError(f"max_iter must be >= 10, got {self.max_iter!r}")


DEFAULT_TOLERANCE = ToleranceConfig()


def forward_map(x: float) -> float:
    """(2x - 1) * e^(2x) + 1, the strictly increasing map that w0 inverts.

    Large arguments (2x > 700) are evaluated in log space so the intermediate
    exponential cannot overflow before the result does.
    """
    x = float(x)
    if not x >= 0.0:
        raise ValueError(f"forward_map requires x >= 0, got {x!r}")
    return backend.forward_map(x)


def w0(y: float, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> float:
    """The unique x >= 0 with forward_map(x) = y.

    The returned x satisfies |forward_map(x) - y| <= rel_tol * max(1, y).
    Safeguarded Newton with a doubling bracket: quadratic near the root,
    bisection whenever a step would leave the bracket, so termination is
    guaranteed for any y the float format can express.
    """
    y = float(y)
    if not y >= 0.0:
        raise ValueError(f"w0 requires y >= 0, got {y!r}")
    return backend.w0(y, tol.rel_tol, tol.max_iter)


def forward_map_grid(xs, out: np.ndarray | None = None) -> np.ndarray:
    """Elementwise forward_map over a 1-D array."""
    xs = np.asarray(xs, dtype=np.float64)
    if xs.ndim != 1:
        raise ValueError("forward_map_grid expects a 1-D array")
    if xs.size and float(xs.min()) < 0.0:
        raise ValueError("forward_map_grid requires all x >= 0")
    return backend.forward_map_many(xs, out)


def w0_grid(ys, tol: ToleranceConfig = DEFAULT_TOLERANCE, out: np.ndarray | None = None) -> np.ndarray:
    """Elementwise w0 over a 1-D array."""
    ys = np.asarray(ys, dtype=np.float64)
    if ys.ndim != 1:
        raise ValueError("w0_grid expects a 1-D array")
    if ys.size and float(ys.min()) < 0.0:
        raise ValueError("w0_grid requires all y >= 0")
    return backend.w0_many(ys, tol.rel_tol, tol.max_iter, out)
