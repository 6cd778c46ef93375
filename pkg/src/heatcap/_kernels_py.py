"""Pure-Python kernels: inverse capacity map and ladder water-filling.

This module mirrors the compiled extension ``heatcap._kernels`` operation for
operation; ``heatcap.backend`` picks whichever is available at import time.
Keep the arithmetic here in the exact same order as the .pyx twin so the two
backends produce identical doubles.
"""

import math

import numpy as np

from .errors import ConvergenceError

BACKEND_NAME = "python"

# Beyond this value of 2x, (2x-1)*e^(2x) must be formed in log space to avoid
# overflowing the intermediate exponential.
_EXP_ARG_LIMIT = 700.0


def forward_map(x: float) -> float:
    """(2x - 1) * e^(2x) + 1 for x >= 0. Callers validate the domain."""
    t = 2.0 * x
    if t > _EXP_ARG_LIMIT:
        # mirror C exp(): overflow saturates to inf instead of raising
        try:
            return math.exp(t + math.log(t - 1.0)) + 1.0
        except OverflowError:
            return math.inf
    return (t - 1.0) * math.exp(t) + 1.0


def w0(y: float, rel_tol: float, max_iter: int) -> float:
    """Invert forward_map: the x >= 0 with |forward_map(x) - y| <= rel_tol*max(1, y).

    Safeguarded Newton iteration on a bracket [lo, hi] that always contains
    the root; any step that would leave the bracket falls back to bisection.
    """
    if y == 0.0:
        return 0.0
    tol = rel_tol * max(1.0, y)
    lo = 0.0
    hi = max(1.0, 0.5 * math.log1p(y)) + 1.0
    while forward_map(hi) < y:
        lo = hi
        hi *= 2.0
        if hi > 8.98e307:
            raise ConvergenceError(f"w0 bracket expansion ran away for y={y!r}")
    x = hi
    for _ in range(max_iter):
        g = forward_map(x)
        r = g - y
        if abs(r) <= tol:
            return x
        if r > 0.0:
            hi = x
        else:
            lo = x
        d = 4.0 * x * math.exp(min(2.0 * x, _EXP_ARG_LIMIT))
        if d > 0.0 and math.isfinite(r) and math.isfinite(d):
            xn = x - r / d
        else:
            xn = 0.5 * (lo + hi)
        if not lo < xn < hi:
            xn = 0.5 * (lo + hi)
        x = xn
    raise ConvergenceError(
        f"w0({y!r}) did not reach tolerance {tol!r} within {max_iter} iterations"
    )


def forward_map_many(xs, out=None) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.float64)
    if out is None:
        out = np.empty(xs.shape[0], dtype=np.float64)
    for i in range(xs.shape[0]):
        out[i] = forward_map(float(xs[i]))
    return out


def w0_many(ys, rel_tol: float, max_iter: int, out=None) -> np.ndarray:
    ys = np.asarray(ys, dtype=np.float64)
    if out is None:
        out = np.empty(ys.shape[0], dtype=np.float64)
    for i in range(ys.shape[0]):
        out[i] = w0(float(ys[i]), rel_tol, max_iter)
    return out


def ladder_waterfill(levels, total: float):
    """Water-fill a nondecreasing ladder of noise levels.

    Returns (water level, active count, capacity in nats). For total == 0
    the water level sits at the noise floor and nothing is active. Feasible
    counts form a prefix of 1..n, so the scan stops at the first count whose
    candidate level no longer clears its worst active rung.
    """
    levels = np.asarray(levels, dtype=np.float64)
    if total == 0.0:
        return float(levels[0]), 0, 0.0
    prefix = 0.0
    nu = 0.0
    count = 0
    for k in range(levels.shape[0]):
        prefix += float(levels[k])
        cand = (total + prefix) / (k + 1.0)
        if cand > float(levels[k]):
            nu = cand
            count = k + 1
        else:
            break
    cap = 0.0
    for i in range(count):
        cap += 0.5 * math.log(nu / float(levels[i]))
    return nu, count, cap
