"""Baseline channels plotted alongside the heat channel.

The ideal AWGN channel gives the classic log2(1 + snr) ceiling; the Gaussian
filter channel is a time-invariant filter with AWGN whose capacity comes from
1-D frequency-domain water-filling. The filter's transfer function is a
modeling choice made for visual comparability (no published parameterization
exists for it), so curve outputs label it illustrative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .w0 import DEFAULT_TOLERANCE, ToleranceConfig
from .waterfill import FrequencyProfile, FrequencyWaterfillResult, waterfill_frequency

__all__ = [
    "GaussianFilterSpec",
    "awgn_spectral_efficiency",
    "awgn_ebn0",
    "gaussian_filter_profile",
    "flat_band_profile",
    "gallager_waterfill",
    "gallager_gaussian_capacity",
    "gallager_spectral_efficiency",
]

_LN2 = math.log(2.0)


def awgn_spectral_efficiency(snr: float) -> float:
    """Ideal AWGN ceiling log2(1 + snr) in bit/s/Hz."""
    snr = float(snr)
    if not snr >= 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    return math.log1p(snr) / _LN2


def awgn_ebn0(snr: float) -> float:
    """Linear Eb/N0 of the AWGN baseline, snr / log2(1 + snr); needs snr > 0."""
    snr = float(snr)
    if not snr > 0.0:
        raise ValueError(f"ebn0 requires snr > 0, got {snr!r}")
    return snr / awgn_spectral_efficiency(snr)


@dataclass(frozen=True)
class GaussianFilterSpec:
    """Gaussian filter channel: |H(f)|^2 = exp(-c f^2 / beta_g^2) with AWGN.

    beta_g is the filter frequency scale in Hz, n0 the one-sided noise PSD,
    and exponent_coeff the constant c (2*pi by default, mirroring the heat
    channel's frequency profile).
    """

    beta_g: float
    n0: float
    exponent_coeff: float = 2.0 * math.pi

    def __post_init__(self):
        if not self.beta_g > 0.0:
            raise ValueError(f"beta_g must be positive, got {self.beta_g!r}")
        if not self.n0 > 0.0:
            raise ValueError(f"n0 must be positive, got {self.n0!r}")
        if not self.exponent_coeff > 0.0:
            raise ValueError(f"exponent_coeff must be positive, got {self.exponent_coeff!r}")

    @property
    def bandwidth(self) -> float:
        """Plotting bandwidth beta_g / 2, mirroring the heat channel's W."""
        return 0.5 * self.beta_g


def gaussian_filter_profile(spec: GaussianFilterSpec) -> FrequencyProfile:
    """Effective noise density N(f) = (n0/2) / |H(f)|^2 for the Gaussian filter."""
    floor = 0.5 * spec.n0
    coeff = spec.exponent_coeff / (spec.beta_g * spec.beta_g)

    def noise_at(f):
        return floor * np.exp(coeff * np.square(f))

    def halfwidth_at(nu: float) -> float:
        if nu <= floor:
            return 0.0
        return math.sqrt(math.log(nu / floor) / coeff)

    return FrequencyProfile(noise_at, halfwidth_at, floor)


def flat_band_profile(n0: float, half_width: float) -> FrequencyProfile:
    """Ideal band-limited profile: N = n0/2 on [-half_width, half_width].

    Test hook: water-filling this profile must reproduce the Shannon formula
    half_width * log2(1 + P / (n0 * half_width)) exactly.
    """
    if not (n0 > 0.0 and half_width > 0.0):
        raise ValueError("n0 and half_width must be positive")
    floor = 0.5 * n0

    def noise_at(f):
        return np.full_like(np.asarray(f, dtype=np.float64), floor)

    def halfwidth_at(nu: float) -> float:
        return half_width if nu > floor else 0.0

    return FrequencyProfile(noise_at, halfwidth_at, floor)


def gallager_waterfill(
    spec: GaussianFilterSpec,
    power: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    abs_tol: float = 1e-10,
) -> FrequencyWaterfillResult:
    """Full water-filling solution for the Gaussian filter channel."""
    return waterfill_frequency(gaussian_filter_profile(spec), power, tol, abs_tol)


def gallager_gaussian_capacity(
    spec: GaussianFilterSpec,
    power: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    abs_tol: float = 1e-10,
) -> float:
    """Capacity of the Gaussian filter channel in bit/s at average power P."""
    return gallager_waterfill(spec, power, tol, abs_tol).capacity_bits_per_s


def gallager_spectral_efficiency(
    spec: GaussianFilterSpec,
    snr: float,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    abs_tol: float = 1e-10,
) -> float:
    """Capacity per plotting bandwidth at SNR = P / ((beta_g/2) * n0)."""
    snr = float(snr)
    if not snr >= 0.0:
        raise ValueError(f"snr must be >= 0, got {snr!r}")
    power = snr * spec.bandwidth * spec.n0
    return gallager_gaussian_capacity(spec, power, tol, abs_tol) / spec.bandwidth
