"""Channel geometry: time scale, frequency scale, and noise parameter."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class HeatChannelGeometry:
    """Heat-channel parameters.

    alpha is the time scale in seconds, beta the frequency scale in hertz,
    theta2 the noise parameter in power-spectral units. Derived quantities:
    ``tbp`` = alpha*beta (dimensionless), ``duration`` = 2*pi*alpha seconds,
    ``bandwidth`` = beta/2 hertz (positive frequencies), ``n0`` = 2*theta2
    (one-sided noise power spectral density).
    """

    alpha: float
    beta: float
    theta2: float = 1.0

    def __post_init__(self):
        if not self.alpha > 0.0:
            raise ValueError(f"alpha must be positive, got {self.alpha!r}")
        if not self.beta > 0.0:
            raise ValueError(f"beta must be positive, got {self.beta!r}")
        if not self.theta2 > 0.0:
            raise ValueError(f"theta2 must be positive, got {self.theta2!r}")

    @property
    def tbp(self) -> float:
        return self.alpha * self.beta

    @property
    def duration(self) -> float:
        return 2.0 * math.pi * self.alpha

    @property
    def bandwidth(self) -> float:
        return 0.5 * self.beta

    @property
    def n0(self) -> float:
        return 2.0 * self.theta2
