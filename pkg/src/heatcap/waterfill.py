"""Water-filling engines.

Three instantiations of the same optimization: a discrete ladder of noise
levels, a monotone one-dimensional frequency profile, and the two-dimensional
time-frequency noise surface of the heat channel. Each returns the water
level, the power/energy allocation, and the resulting capacity. Everything
here is pure; callers may evaluate many cases in parallel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import backend
from .errors import ConvergenceError, DivergenceError, PrecisionError
from .geometry import HeatChannelGeometry
from .quadrature import adaptive_quad, gauss_legendre
from .w0 import DEFAULT_TOLERANCE, ToleranceConfig

__all__ = [
    "ModeSpectrum",
    "WaterfillResult",
    "QuadratureSpec",
    "FrequencyProfile",
    "FrequencyWaterfillResult",
    "waterfill_discrete",
    "solve_water_level",
    "energy_at_level",
    "capacity_at_level",
    "waterfill_quadrature_2d",
    "waterfill_frequency",
]

_LOG2E = math.log2(math.e)
_TWO_PI = 2.0 * math.pi
_EPS = float(np.finfo(np.float64).eps)

# The tensor-grid integrator doubles its per-axis node count until converged.
_TENSOR_START_N = 8
_TENSOR_MAX_N = 2048


@dataclass(frozen=True)
class ModeSpectrum:
    """A nondecreasing ladder of strictly positive effective noise levels."""

    levels: np.ndarray

    def __post_init__(self):
        levels = np.ascontiguousarray(self.levels, dtype=np.float64)
        if levels.ndim != 1 or levels.size == 0:
            raise ValueError("levels must be a nonempty 1-D sequence")
        if not float(levels[0]) > 0.0:
            raise ValueError("levels must be strictly positive")
        if np.any(np.diff(levels) < 0.0):
            raise ValueError("levels must be nondecreasing")
        levels.setflags(write=False)
        object.__setattr__(self, "levels", levels)

    def __len__(self) -> int:
        return int(self.levels.size)


@dataclass(frozen=True, eq=False)
class WaterfillResult:
    """Solution of a water-filling problem.

    ``allocation`` holds the per-mode powers for discrete problems and is
    empty for continuum solutions, where ``active_count`` is likewise
    reported as 0.
    """

    water_level: float
    capacity_nats: float
    active_count: int
    allocation: np.ndarray = field(default_factory=lambda: np.zeros(0))

    @property
    def capacity_bits(self) -> float:
        return self.capacity_nats * _LOG2E


@dataclass(frozen=True)
class QuadratureSpec:
    """Accuracy controls for the quadrature-based water-filling paths."""

    abs_tol: float = 1e-10
    max_refinements: int = 2000

    def __post_init__(self):
        if not self.abs_tol > 0.0:
            raise ValueError(f"abs_tol must be positive, got {self.abs_tol!r}")
        if self.max_refinements < 1:
            raise ValueError(f"max_refinements must be >= 1, got {self.max_refinements!r}")


DEFAULT_QUADRATURE = QuadratureSpec()


def waterfill_discrete(
    spectrum: ModeSpectrum,
    total_energy: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> WaterfillResult:
    """Water-fill a discrete mode ladder with the given input energy.

    Picks the largest active count K for which the implied water level
    nu = (S + sum of the K lowest levels)/K still clears the K-th level,
    then allocates nu - N_k to each active mode. Capacity is
    sum(0.5 * ln(nu / N_k)) over active modes, in nats.
    """
    total_energy = float(total_energy)
    if not total_energy >= 0.0:
        raise ValueError(f"input energy must be >= 0, got {total_energy!r}")
    levels = spectrum.levels
    nu, count, cap = backend.ladder_waterfill(levels, total_energy)
    allocation = np.zeros(levels.size)
    if count:
        allocation[:count] = nu - levels[:count]
    delivered = float(allocation.sum())
    # Internal sanity guard; the contract is 1e-12 relative and is asserted
    # at that level by the test suite.
    if abs(delivered - total_energy) > 1e-9 * max(1.0, total_energy):
        raise ArithmeticError(
            f"energy mismatch in discrete water-fill: {delivered!r} != {total_energy!r}"
        )
    return WaterfillResult(nu, cap, count, allocation)


def solve_water_level(
    delivered_energy: Callable[[float], float],
    target: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    *,
    nu_floor: float,
) -> float:
    """Find the water level nu at which a monotone energy profile meets a target.

    ``delivered_energy`` must be nondecreasing with value 0 at ``nu_floor``
    (the infimum of the noise profile). Returns nu with
    |delivered_energy(nu) - target| <= rel_tol * max(1, target).
    """
    target = float(target)
    if not target >= 0.0:
        raise ValueError(f"target energy must be >= 0, got {target!r}")
    if target == 0.0:
        return nu_floor
    accept = tol.rel_tol * max(1.0, target)

    lo = nu_floor
    hi = 2.0 * nu_floor if nu_floor > 0.0 else 1.0
    while delivered_energy(hi) < target:
        lo = hi
        hi *= 2.0
        if hi > 1e308:
            raise DivergenceError(
                f"water-level bracket exceeded 1e308 while chasing target {target!r}"
            )
    for _ in range(tol.max_iter):
        mid = 0.5 * (lo + hi)
        value = delivered_energy(mid)
        if abs(value - target) <= accept:
            return mid
        if value < target:
            lo = mid
        else:
            hi = mid
    raise ConvergenceError(
        f"water-level bisection did not reach tolerance {accept!r} "
        f"within {tol.max_iter} iterations"
    )


def _heat_ustar(geom: HeatChannelGeometry, nu: float) -> float:
    # Depth of the water region in units of the exponent u; 0 if dry.
    if nu <= geom.theta2:
        return 0.0
    return math.log(nu / geom.theta2)


def _tensor_integral(
    geom: HeatChannelGeometry,
    nu: float,
    kind: str,
    abs_tol: float,
    max_refinements: int,
) -> float:
    """Direct 2-D tensor-product Gauss-Legendre integral over the water region.

    Integrates either nu - N(t, f) (kind "energy") or 0.5*ln(nu / N(t, f))
    (kind "capacity") over {(t, f): N(t, f) <= nu} with
    N(t, f) = theta2 * exp(2 pi t^2 / alpha^2 + 2 pi f^2 / beta^2).
    The outer variable is mapped t = t_max * sin(phi) so the integrand stays
    analytic at the region boundary; node counts double until two successive
    grids agree to abs_tol.
    """
    ustar = _heat_ustar(geom, nu)
    if ustar == 0.0:
        return 0.0
    theta2 = geom.theta2
    alpha2 = geom.alpha * geom.alpha
    beta2 = geom.beta * geom.beta
    tmax = geom.alpha * math.sqrt(ustar / _TWO_PI)

    prev = None
    n = _TENSOR_START_N
    refinements = 0
    while True:
        xg, wg = gauss_legendre(n)
        phi = 0.5 * math.pi * xg
        t = tmax * np.sin(phi)
        u_t = _TWO_PI * t * t / alpha2
        depth = np.maximum(ustar - u_t, 0.0)
        f_max = geom.beta * np.sqrt(depth / _TWO_PI)
        w_t = tmax * np.cos(phi) * (0.5 * math.pi * wg)

        f = np.outer(f_max, xg)
        u = u_t[:, None] + _TWO_PI * f * f / beta2
        if kind == "energy":
            vals = nu - theta2 * np.exp(u)
        else:
            vals = 0.5 * (ustar - u)
        total = float(np.sum(np.outer(w_t * f_max, wg) * vals))

        # as in the 1-D engine, grid agreement below machine noise counts
        if prev is not None and abs(total - prev) <= max(
            abs_tol, 100.0 * _EPS * abs(total)
        ):
            return total
        if n >= _TENSOR_MAX_N or refinements >= max_refinements:
            raise PrecisionError(
                f"tensor quadrature stalled at n={n} with change "
                f"{abs(total - prev) if prev is not None else math.inf:.3e}",
                total,
                abs(total - prev) if prev is not None else math.inf,
            )
        prev = total
        n *= 2
        refinements += 1


def energy_at_level(
    geom: HeatChannelGeometry,
    nu: float,
    method: str = "collapsed",
    abs_tol: float = 1e-10,
    max_refinements: int = 2000,
) -> float:
    """Energy delivered by water level nu over the heat-channel noise surface.

    The "collapsed" method integrates over the exponent variable u, whose
    sublevel sets have measure (alpha*beta/2)*u; "tensor" evaluates the
    double integral directly in the (t, f) plane as an independent check of
    that reduction.
    """
    if method == "tensor":
        return _tensor_integral(geom, nu, "energy", abs_tol, max_refinements)
    if method != "collapsed":
        raise ValueError(f"unknown quadrature method {method!r}")
    ustar = _heat_ustar(geom, nu)
    if ustar == 0.0:
        return 0.0
    half_tbp = 0.5 * geom.tbp
    theta2 = geom.theta2

    def integrand(u):
        return half_tbp * (nu - theta2 * np.exp(u))

    return adaptive_quad(integrand, 0.0, ustar, abs_tol, max_refinements)


def capacity_at_level(
    geom: HeatChannelGeometry,
    nu: float,
    method: str = "collapsed",
    abs_tol: float = 1e-10,
    max_refinements: int = 2000,
) -> float:
    """Capacity in nats carried by water level nu (companion of energy_at_level)."""
    if method == "tensor":
        return _tensor_integral(geom, nu, "capacity", abs_tol, max_refinements)
    if method != "collapsed":
        raise ValueError(f"unknown quadrature method {method!r}")
    ustar = _heat_ustar(geom, nu)
    if ustar == 0.0:
        return 0.0
    half_tbp = 0.5 * geom.tbp

    def integrand(u):
        return half_tbp * 0.5 * (ustar - u)

    return adaptive_quad(integrand, 0.0, ustar, abs_tol, max_refinements)


def waterfill_quadrature_2d(
    geom: HeatChannelGeometry,
    total_energy: float,
    spec: QuadratureSpec = DEFAULT_QUADRATURE,
    *,
    method: str = "collapsed",
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> WaterfillResult:
    """Water-fill the heat channel's time-frequency noise surface numerically.

    Solves for the water level nu with delivered energy equal to
    ``total_energy`` and integrates the capacity density over the water
    region. ``method`` selects the collapsed 1-D path (default) or the
    non-collapsed tensor-grid cross-check. The continuum has no mode count,
    so ``active_count`` is reported as 0 with an empty allocation.
    """
    total_energy = float(total_energy)
    if not total_energy >= 0.0:
        raise ValueError(f"input energy must be >= 0, got {total_energy!r}")
    if total_energy == 0.0:
        return WaterfillResult(geom.theta2, 0.0, 0)

    # The energy integrals feeding the root find are resolved well below the
    # acceptance band of the bisection so quadrature noise cannot stall it.
    s_tol = max(1e-3 * tol.rel_tol, 1e-13) * max(1.0, total_energy)

    def delivered(nu: float) -> float:
        return energy_at_level(geom, nu, method, s_tol, spec.max_refinements)

    nu = solve_water_level(delivered, total_energy, tol, nu_floor=geom.theta2)
    cap = capacity_at_level(geom, nu, method, spec.abs_tol, spec.max_refinements)
    return WaterfillResult(nu, cap, 0)


@dataclass(frozen=True)
class FrequencyProfile:
    """A monotone, even noise-density profile N(f) for 1-D water-filling.

    ``noise_at`` is vectorized over frequency; ``halfwidth_at`` returns the
    half-width f* of the active band {f: N(f) <= nu} (capped at any band
    limit the profile carries); ``floor`` is the infimum of N.
    """

    noise_at: Callable[[np.ndarray], np.ndarray]
    halfwidth_at: Callable[[float], float]
    floor: float


@dataclass(frozen=True)
class FrequencyWaterfillResult:
    """Water level, active band, delivered power, and rate for a 1-D profile."""

    water_level: float
    band: tuple[float, float]
    power: float
    capacity_bits_per_s: float


def waterfill_frequency(
    profile: FrequencyProfile,
    power: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    abs_tol: float = 1e-10,
    max_refinements: int = 2000,
) -> FrequencyWaterfillResult:
    """Water-fill a monotone frequency profile with the given average power.

    The active band is the symmetric interval [-f*, f*] where the profile
    sits below the water level; the rate integral is evaluated in bit/s.
    """
    power = float(power)
    if not power >= 0.0:
        raise ValueError(f"power must be >= 0, got {power!r}")
    if power == 0.0:
        return FrequencyWaterfillResult(profile.floor, (0.0, 0.0), 0.0, 0.0)

    s_tol = max(1e-3 * tol.rel_tol, 1e-13) * max(1.0, power)

    def delivered(nu: float) -> float:
        fs = profile.halfwidth_at(nu)
        if fs <= 0.0:
            return 0.0
        return adaptive_quad(
            lambda f: nu - profile.noise_at(f), -fs, fs, s_tol, max_refinements
        )

    nu = solve_water_level(delivered, power, tol, nu_floor=profile.floor)
    fs = profile.halfwidth_at(nu)
    rate = adaptive_quad(
        lambda f: 0.5 * np.log2(nu / profile.noise_at(f)),
        -fs,
        fs,
        abs_tol,
        max_refinements,
    )
    return FrequencyWaterfillResult(nu, (-fs, fs), power, rate)
