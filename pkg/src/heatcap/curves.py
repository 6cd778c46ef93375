"""Spectral-efficiency sweeps for the curve outputs.

A sweep samples SNR linearly in dB and evaluates, per point, the
heat-channel and AWGN spectral efficiencies plus both channels' Eb/N0
values (and optionally the Gaussian-filter comparison). The same point list
backs both figure types; they differ only in which fields the axes use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .baselines import (
    GaussianFilterSpec,
    awgn_ebn0,
    awgn_spectral_efficiency,
    gallager_spectral_efficiency,
)
from .channel import ebn0_from_snr, spectral_efficiency
from .w0 import DEFAULT_TOLERANCE, ToleranceConfig

__all__ = [
    "SweepSpec",
    "CurvePoint",
    "DEFAULT_SWEEP",
    "sweep_snr_curve",
    "sweep_ebn0_curve",
]


@dataclass(frozen=True)
class SweepSpec:
    """SNR sweep: [snr_min_db, snr_max_db] sampled at `points` dB-linear steps."""

    snr_min_db: float = -30.0
    snr_max_db: float = 30.0
    points: int = 121
    spacing: str = "db-linear"

    def __post_init__(self):
        if not self.snr_min_db < self.snr_max_db:
            raise ValueError(
                f"need snr_min_db < snr_max_db, got [{self.snr_min_db!r}, {self.snr_max_db!r}]"
            )
        if self.points < 2:
            raise ValueError(f"points must be >= 2, got {self.points!r}")
        if self.spacing != "db-linear":
            raise ValueError(f"unsupported spacing {self.spacing!r}")

    def sample_dbs(self) -> list[float]:
        step = (self.snr_max_db - self.snr_min_db) / (self.points - 1)
        return [self.snr_min_db + i * step for i in range(self.points)]


DEFAULT_SWEEP = SweepSpec()


@dataclass(frozen=True)
class CurvePoint:
    """One sweep sample; se_gallager is None when the comparison is disabled."""

    snr_db: float
    snr: float
    se_heat: float
    se_awgn: float
    se_gallager: float | None
    ebn0_heat_db: float
    ebn0_awgn_db: float


def _db(value: float) -> float:
    return 10.0 * math.log10(value)


def _evaluate(spec: SweepSpec, gallager: GaussianFilterSpec | None, tol: ToleranceConfig):
    points = []
    for snr_db in spec.sample_dbs():
        snr = 10.0 ** (snr_db / 10.0)
        se_heat = spectral_efficiency(snr, tol)
        se_awgn = awgn_spectral_efficiency(snr)
        se_g = None if gallager is None else gallager_spectral_efficiency(gallager, snr, tol)
        points.append(
            CurvePoint(
                snr_db=snr_db,
                snr=snr,
                se_heat=se_heat,
                se_awgn=se_awgn,
                se_gallager=se_g,
                ebn0_heat_db=_db(ebn0_from_snr(snr, tol)),
                ebn0_awgn_db=_db(awgn_ebn0(snr)),
            )
        )
    return points


def sweep_snr_curve(
    spec: SweepSpec = DEFAULT_SWEEP,
    gallager: GaussianFilterSpec | None = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> list[CurvePoint]:
    """Points for the spectral-efficiency-versus-SNR figure (figure 2)."""
    return _evaluate(spec, gallager, tol)


def sweep_ebn0_curve(
    spec: SweepSpec = DEFAULT_SWEEP,
    gallager: GaussianFilterSpec | None = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> list[CurvePoint]:
    """Points for the spectral-efficiency-versus-Eb/N0 figure (figure 3).

    The curve is parametric in snr: each point pairs the Eb/N0 of a channel
    with that channel's own spectral efficiency at the same snr, traversed
    in increasing snr.
    """
    return _evaluate(spec, gallager, tol)
