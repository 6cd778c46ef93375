import math

import pytest

from heatcap import HeatChannelGeometry, snr_to_energy


@pytest.fixture
def ref_geom() -> HeatChannelGeometry:
    """Reference example geometry: alpha = 50 ps, beta = 200 GHz, theta2 = 1."""
    return HeatChannelGeometry(50e-12, 200e9, 1.0)


@pytest.fixture
def ref_energy(ref_geom) -> float:
    """Input energy at the reference snr = 1000 / (2 pi); essentially 1e4."""
    return snr_to_energy(ref_geom, 1000.0 / (2.0 * math.pi))
