# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: inverse capacity map and ladder water-filling.

Twin of ``heatcap._kernels_py``. The arithmetic is kept in the exact same
order as the Python version (and the extension is built with
-ffp-contract=off) so both backends produce identical doubles.
"""

from libc.math cimport exp, fabs, isfinite, log, log1p

import numpy as np

from .errors import ConvergenceError

BACKEND_NAME = "compiled"

cdef double _EXP_ARG_LIMIT = 700.0


cdef inline double _forward(double x) noexcept nogil:
    cdef double t = 2.0 * x
    if t > _EXP_ARG_LIMIT:
        return exp(t + log(t - 1.0)) + 1.0
    return (t - 1.0) * exp(t) + 1.0


cdef double _w0(double y, double rel_tol, int max_iter) noexcept nogil:
    # Returns -1.0 on convergence failure; w0 itself is always >= 0.
    cdef double tol, lo, hi, x, g, r, d, xn, t
    cdef int i
    if y == 0.0:
        return 0.0
    tol = rel_tol * (y if y > 1.0 else 1.0)
    lo = 0.0
    hi = 0.5 * log1p(y)
    if hi < 1.0:
        hi = 1.0
    hi = hi + 1.0
    while _forward(hi) < y:
        lo = hi
        hi *= 2.0
        if hi > 8.98e307:
            return -1.0
    x = hi
    for i in range(max_iter):
        g = _forward(x)
        r = g - y
        if fabs(r) <= tol:
            return x
        if r > 0.0:
            hi = x
        else:
            lo = x
        t = 2.0 * x
        if t > _EXP_ARG_LIMIT:
            t = _EXP_ARG_LIMIT
        d = 4.0 * x * exp(t)
        if d > 0.0 and isfinite(r) and isfinite(d):
            xn = x - r / d
        else:
            xn = 0.5 * (lo + hi)
        if not (lo < xn and xn < hi):
            xn = 0.5 * (lo + hi)
        x = xn
    return -1.0


def forward_map(double x):
    """(2x - 1) * e^(2x) + 1 for x >= 0. Callers validate the domain."""
    return _forward(x)


def w0(double y, double rel_tol, int max_iter):
    """Invert forward_map to |residual| <= rel_tol * max(1, y)."""
    cdef double r = _w0(y, rel_tol, max_iter)
    if r < 0.0:
        raise ConvergenceError(
            f"w0({y!r}) did not reach tolerance within {max_iter} iterations"
        )
    return r


def forward_map_many(xs, out=None):
    cdef const double[::1] xv = np.ascontiguousarray(xs, dtype=np.float64)
    if out is None:
        out = np.empty(xv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    with nogil:
        for i in range(xv.shape[0]):
            ov[i] = _forward(xv[i])
    return out


def w0_many(ys, double rel_tol, int max_iter, out=None):
    cdef const double[::1] yv = np.ascontiguousarray(ys, dtype=np.float64)
    if out is None:
        out = np.empty(yv.shape[0], dtype=np.float64)
    cdef double[::1] ov = out
    cdef Py_ssize_t i
    cdef bint failed = False
    with nogil:
        for i in range(yv.shape[0]):
            ov[i] = _w0(yv[i], rel_tol, max_iter)
            if ov[i] < 0.0:
                failed = True
                break
    if failed:
        raise ConvergenceError(
            f"w0({ys[i]!r}) did not reach tolerance within {max_iter} iterations"
        )
    return out


def ladder_waterfill(levels, double total):
    """Water-fill a nondecreasing ladder; see the Python twin for semantics."""
    cdef const double[::1] lv = np.ascontiguousarray(levels, dtype=np.float64)
    cdef double prefix = 0.0, nu = 0.0, cand, cap = 0.0
    cdef Py_ssize_t k, count = 0
    if total == 0.0:
        return float(lv[0]), 0, 0.0
    with nogil:
        for k in range(lv.shape[0]):
            prefix += lv[k]
            cand = (total + prefix) / (k + 1.0)
            if cand > lv[k]:
                nu = cand
                count = k + 1
            else:
                break
        for k in range(count):
            cap += 0.5 * log(nu / lv[k])
    return nu, int(count), cap
