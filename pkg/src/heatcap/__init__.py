"""heatcap: heat-channel capacity by three mutually verifying methods.

The heat channel is a linear time-varying Gaussian-filter channel with
additive white Gaussian noise, parameterized by a time scale alpha, a
frequency scale beta, and a noise parameter theta2. This package computes
its capacity by a closed-form expression, by discrete eigenmode
water-filling, and by 2-D time-frequency water-filling quadrature, and
generates spectral-efficiency curves against AWGN and Gaussian-filter
baselines.
"""

from .backend import BACKEND_NAME
from .baselines import (
    GaussianFilterSpec,
    awgn_ebn0,
    awgn_spectral_efficiency,
    flat_band_profile,
    gallager_gaussian_capacity,
    gallager_spectral_efficiency,
    gallager_waterfill,
    gaussian_filter_profile,
)
from .channel import (
    CapacityReport,
    capacity_closed_form,
    capacity_exact_discrete,
    compute_capacity_report,
    ebn0_from_snr,
    heat_mode_spectrum,
    rate_bits_per_second,
    snr_to_energy,
    spectral_efficiency,
)
from .curves import DEFAULT_SWEEP, CurvePoint, SweepSpec, sweep_ebn0_curve, sweep_snr_curve
from .emit import AxesSpec, SeriesSpec, ebn0_axes, emit_csv, emit_json, emit_svg, read_csv, snr_axes
from .errors import ConvergenceError, DivergenceError, PrecisionError
from .geometry import HeatChannelGeometry
from .quadrature import adaptive_quad
from .w0 import DEFAULT_TOLERANCE, ToleranceConfig, forward_map, forward_map_grid, w0, w0_grid
from .waterfill import (
    FrequencyProfile,
    FrequencyWaterfillResult,
    ModeSpectrum,
    QuadratureSpec,
    WaterfillResult,
    capacity_at_level,
    energy_at_level,
    solve_water_level,
    waterfill_discrete,
    waterfill_frequency,
    waterfill_quadrature_2d,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "BACKEND_NAME",
    "ToleranceConfig",
    "DEFAULT_TOLERANCE",
    "forward_map",
    "forward_map_grid",
    "w0",
    "w0_grid",
    "adaptive_quad",
    "HeatChannelGeometry",
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
    "snr_to_energy",
    "capacity_closed_form",
    "heat_mode_spectrum",
    "capacity_exact_discrete",
    "rate_bits_per_second",
    "spectral_efficiency",
    "ebn0_from_snr",
    "CapacityReport",
    "compute_capacity_report",
    "GaussianFilterSpec",
    "awgn_spectral_efficiency",
    "awgn_ebn0",
    "gaussian_filter_profile",
    "flat_band_profile",
    "gallager_waterfill",
    "gallager_gaussian_capacity",
    "gallager_spectral_efficiency",
    "SweepSpec",
    "CurvePoint",
    "DEFAULT_SWEEP",
    "sweep_snr_curve",
    "sweep_ebn0_curve",
    "AxesSpec",
    "SeriesSpec",
    "snr_axes",
    "ebn0_axes",
    "emit_csv",
    "emit_json",
    "emit_svg",
    "read_csv",
    "ConvergenceError",
    "DivergenceError",
    "PrecisionError",
]
