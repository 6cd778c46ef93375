"""Heat-channel capacity: closed form, discrete eigenmode ladder, and rates.

Unit conventions: energies share the units of theta2 times time-frequency
area (dimensionless here), capacities are in nats unless a name says bits,
SNR is linear, and rates are per second. Capacity depends on the channel
only through (alpha*beta, S/theta2), which the test suite pins down as an
exact scale invariance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import HeatChannelGeometry
from .w0 import DEFAULT_TOLERANCE, ToleranceConfig, w0
from .waterfill import (
    DEFAULT_QUADRATURE,
    ModeSpectrum,
    QuadratureSpec,
    WaterfillResult,
    waterfill_discrete,
    waterfill_quadrature_2d,
)

__all__ = [
    "HeatChannelGeometry",
    "CapacityReport",
    "snr_to_energy",
    "capacity_closed_form",
    "heat_mode_spectrum",
    "capacity_exact_discrete",
    "rate_bits_per_second",
    "spectral_efficiency",
    "ebn0_from_snr",
    "compute_capacity_report",
]

_LOG2E = math.log2(math.e)
_INV_TWO_PI = 1.0 / (2.0 * math.pi)


def snr_to_energy(geom: HeatChannelGeometry, snr: float) -> float:
    """Average input energy for a linear SNR.

    S = duration * power with power = snr * bandwidth * n0, which collapses
    to 2*pi * alpha*beta * theta2 * snr.
    """
    snr = float(snr)
    if not snr >= 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    return 2.0 * math.pi * geom.alpha * geom.beta * geom.theta2 * snr


def capacity_closed_form(
    geom: HeatChannelGeometry,
    total_energy: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> float:
    """Leading-order capacity in nats per transmission.

    C(S) = (alpha*beta/2) * w0(S / ((alpha*beta/2) * theta2))^2. This is the
    leading term of an expansion that becomes exact as alpha*beta grows; no
    remainder is modeled.
    """
    total_energy = float(total_energy)
    if not total_energy >= 0.0:
        raise ValueError(f"input energy must be >= 0, got {total_energy!r}")
    half_tbp = 0.5 * geom.tbp
    x = total_energy / (half_tbp * geom.theta2)
    root = w0(x, tol)
    return half_tbp * root * root


def heat_mode_spectrum(geom: HeatChannelGeometry, k_max: int) -> ModeSpectrum:
    """Effective noise ladder N_k = theta2 * exp((2k + 1) / (alpha*beta)).

    This is the midpoint discretization of the channel's exponential noise
    profile at mode density alpha*beta/2 per unit exponent.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max!r}")
    k = np.arange(k_max, dtype=np.float64)
    return ModeSpectrum(geom.theta2 * np.exp((2.0 * k + 1.0) / geom.tbp))


def capacity_exact_discrete(
    geom: HeatChannelGeometry,
    total_energy: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> WaterfillResult:
    """Water-fill the discrete eigenmode ladder, growing it until the top is dry."""
    total_energy = float(total_energy)
    if not total_energy >= 0.0:
        raise ValueError(f"input energy must be >= 0, got {total_energy!r}")
    tbp = geom.tbp
    if total_energy == 0.0:
        spectrum = heat_mode_spectrum(geom, max(1, math.ceil(tbp)))
        return waterfill_discrete(spectrum, 0.0, tol)
    k_max = math.ceil(tbp * max(1.0, math.log1p(total_energy / (tbp * geom.theta2))))
    k_max = max(1, k_max)
    while True:
        spectrum = heat_mode_spectrum(geom, k_max)
        result = waterfill_discrete(spectrum, total_energy, tol)
        if result.active_count < len(spectrum):
            return result
        k_max *= 2


def rate_bits_per_second(
    geom: HeatChannelGeometry,
    snr: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> float:
    """Capacity as a rate: (1/2pi) * bandwidth * w0(4*pi*snr)^2 * log2(e) bit/s."""
    snr = float(snr)
    if not snr >= 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    root = w0(4.0 * math.pi * snr, tol)
    return _INV_TWO_PI * geom.bandwidth * root * root * _LOG2E


def spectral_efficiency(snr: float, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> float:
    """Rate per bandwidth: (1/2pi) * w0(4*pi*snr)^2 * log2(e) bit/s/Hz.

    Geometry-free: the bandwidth cancels out of rate/bandwidth for every
    channel geometry.
    """
    snr = float(snr)
    if not snr >= 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    root = w0(4.0 * math.pi * snr, tol)
    return _INV_TWO_PI * root * root * _LOG2E


def ebn0_from_snr(snr: float, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> float:
    """Energy per bit over one-sided noise PSD, linear: snr / spectral_efficiency.

    Undefined at zero rate, hence the strict positivity requirement. Tends
    to ln 2 from above as snr -> 0.
    """
    snr = float(snr)
    if not snr > 0.0:
        raise ValueError(f"ebn0 requires snr > 0, got {snr!r}")
    return snr / spectral_efficiency(snr, tol)


@dataclass(frozen=True, eq=False)
class CapacityReport:
    """Capacities from the requested methods, with bit accessors and spread.

    Fields are None when the corresponding method was not run. The spread is
    the largest pairwise relative difference among the methods present.
    """

    closed_form_nats: float | None = None
    discrete: WaterfillResult | None = None
    quadrature_nats: float | None = None

    @property
    def closed_form_bits(self) -> float | None:
        return None if self.closed_form_nats is None else self.closed_form_nats * _LOG2E

    @property
    def discrete_bits(self) -> float | None:
        return None if self.discrete is None else self.discrete.capacity_bits

    @property
    def quadrature_bits(self) -> float | None:
        return None if self.quadrature_nats is None else self.quadrature_nats * _LOG2E

    @property
    def values_nats(self) -> dict[str, float]:
        out: dict[str, float] = {}
        if self.closed_form_nats is not None:
            out["closed"] = self.closed_form_nats
        if self.discrete is not None:
            out["discrete"] = self.discrete.capacity_nats
        if self.quadrature_nats is not None:
            out["quadrature"] = self.quadrature_nats
        return out

    @property
    def relative_spread(self) -> float:
        vals = list(self.values_nats.values())
        if len(vals) < 2:
            return 0.0
        hi = max(vals)
        lo = min(vals)
        scale = max(abs(hi), abs(lo))
        return 0.0 if scale == 0.0 else (hi - lo) / scale


def compute_capacity_report(
    geom: HeatChannelGeometry,
    total_energy: float,
    method: str = "all",
    quad_spec: QuadratureSpec = DEFAULT_QUADRATURE,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> CapacityReport:
    """Run the requested capacity methods for one (geometry, energy) point.

    ``method`` is one of "closed", "discrete", "quadrature", or "all".
    """
    if method not in ("closed", "discrete", "quadrature", "all"):
        raise ValueError(f"unknown method {method!r}")
    closed = None
    discrete = None
    quad = None
    if method in ("closed", "all"):
        closed = capacity_closed_form(geom, total_energy, tol)
    if method in ("discrete", "all"):
        discrete = capacity_exact_discrete(geom, total_energy, tol)
    if method in ("quadrature", "all"):
        quad = waterfill_quadrature_2d(geom, total_energy, quad_spec, tol=tol).capacity_nats
    return CapacityReport(closed, discrete, quad)
