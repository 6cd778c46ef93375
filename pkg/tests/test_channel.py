import math

import numpy as np
import pytest

from heatcap import (
    CapacityReport,
    HeatChannelGeometry,
    capacity_closed_form,
    capacity_exact_discrete,
    compute_capacity_report,
    ebn0_from_snr,
    heat_mode_spectrum,
    rate_bits_per_second,
    snr_to_energy,
    spectral_efficiency,
    waterfill_quadrature_2d,
)

import oracles

LOG2E = math.log2(math.e)
SNR_EXAMPLE = 1000.0 / (2.0 * math.pi)


def test_geometry_accessors():
    g = HeatChannelGeometry(50e-12, 200e9, 1.0)
    assert g.tbp == pytest.approx(10.0, rel=1e-15)
    assert g.duration == pytest.approx(2.0 * math.pi * 50e-12, rel=1e-15)
    assert g.bandwidth == 100e9
    assert g.n0 == 2.0


def test_geometry_validation():
    with pytest.raises(ValueError):
        HeatChannelGeometry(0.0, 1.0)
    with pytest.raises(ValueError):
        HeatChannelGeometry(1.0, -1.0)
    with pytest.raises(ValueError):
        HeatChannelGeometry(1.0, 1.0, 0.0)


def test_snr_to_energy(ref_geom):
    assert snr_to_energy(ref_geom, 0.0) == 0.0
    assert snr_to_energy(ref_geom, SNR_EXAMPLE) == pytest.approx(1e4, rel=1e-12)
    unit = HeatChannelGeometry(1.0, 1.0, 1.0)
    assert snr_to_energy(unit, 1.0 / (2.0 * math.pi)) == pytest.approx(1.0, rel=1e-12)
    with pytest.raises(ValueError):
        snr_to_energy(ref_geom, -0.1)


def test_closed_form_values(ref_geom):
    assert capacity_closed_form(ref_geom, 0.0) == 0.0
    small = HeatChannelGeometry(1.0, 2.0, 1.0)
    assert capacity_closed_form(small, 1.0) == pytest.approx(0.25, abs=1e-12)
    nats = capacity_closed_form(ref_geom, 1e4)
    assert nats == pytest.approx(oracles.CLOSED_10_2000_NATS, rel=1e-12)
    bits = nats * LOG2E
    assert bits == pytest.approx(oracles.CLOSED_10_2000_BITS, rel=1e-12)
    assert 64.5 <= bits <= 65.0
    with pytest.raises(ValueError):
        capacity_closed_form(ref_geom, -1.0)


def test_mode_spectrum_values(ref_geom):
    spectrum = heat_mode_spectrum(ref_geom, 30)
    assert spectrum.levels[0] == pytest.approx(math.exp(0.1), rel=1e-14)
    assert spectrum.levels[29] == pytest.approx(math.exp(5.9), rel=1e-14)
    # first level approaches theta2 as the time-bandwidth product grows
    wide = HeatChannelGeometry(1.0, 1e9, 2.0)
    assert heat_mode_spectrum(wide, 1).levels[0] == pytest.approx(2.0, rel=1e-8)
    with pytest.raises(ValueError):
        heat_mode_spectrum(ref_geom, 0)


def test_discrete_reference_example(ref_geom, ref_energy):
    res = capacity_exact_discrete(ref_geom, ref_energy)
    assert res.active_count == oracles.DISCRETE_EXAMPLE_K
    assert res.capacity_bits == pytest.approx(oracles.DISCRETE_EXAMPLE_BITS, rel=1e-12)
    assert res.water_level == pytest.approx(oracles.DISCRETE_EXAMPLE_NU, rel=1e-12)
    # against the reference value the ladder model lands within half a percent
    assert abs(res.capacity_bits - 64.59) / 64.59 <= 5e-3
    # direct arithmetic oracle on the same ladder definition
    nu, k, cap = oracles.ladder_waterfill(oracles.heat_ladder(10.0, 1.0, 100), ref_energy)
    assert res.active_count == k
    assert res.capacity_nats == pytest.approx(cap, rel=1e-12)
    assert res.water_level == pytest.approx(nu, rel=1e-12)


def test_discrete_zero_energy(ref_geom):
    res = capacity_exact_discrete(ref_geom, 0.0)
    assert res.active_count == 0
    assert res.capacity_nats == 0.0


def test_discrete_ladder_always_grows_until_dry():
    # huge normalized energy forces at least one doubling of the initial ladder
    geom = HeatChannelGeometry(1.0, 4.0, 1.0)
    res = capacity_exact_discrete(geom, 1e9)
    assert res.active_count < res.allocation.size
    assert res.allocation[res.active_count:].sum() == 0.0


def test_closed_vs_discrete_gap_shrinks():
    gaps = []
    for tbp in (10.0, 100.0, 1000.0):
        geom = HeatChannelGeometry(1.0, tbp, 1.0)
        energy = 2000.0 * 0.5 * tbp
        closed = capacity_closed_form(geom, energy)
        disc = capacity_exact_discrete(geom, energy).capacity_nats
        gaps.append(abs(closed - disc) / closed)
    assert gaps[0] <= 1e-2
    assert gaps[2] <= 5e-4
    assert gaps[0] > gaps[1] > gaps[2]


def test_rate_values(ref_geom):
    assert rate_bits_per_second(ref_geom, 0.0) == 0.0
    geom = HeatChannelGeometry(alpha=50e-12, beta=200e9)  # W = 100 GHz
    rate = rate_bits_per_second(geom, SNR_EXAMPLE)
    assert rate == pytest.approx(1e11 * oracles.SE_EXAMPLE_SNR, rel=1e-12)
    # low-snr slope: rate/W tends to snr * log2(e)
    tiny = rate_bits_per_second(geom, 1e-6) / geom.bandwidth
    assert tiny == pytest.approx(1e-6 * LOG2E, rel=1e-2)
    with pytest.raises(ValueError):
        rate_bits_per_second(geom, -1.0)


def test_spectral_efficiency_values():
    assert spectral_efficiency(0.0) == 0.0
    assert spectral_efficiency(1.0) == pytest.approx(oracles.SE_SNR1, rel=1e-12)
    assert spectral_efficiency(SNR_EXAMPLE) == pytest.approx(oracles.SE_EXAMPLE_SNR, rel=1e-12)


def test_ebn0_values():
    assert ebn0_from_snr(1.0) == pytest.approx(oracles.EBN0_SNR1, rel=1e-12)
    assert 10 * math.log10(ebn0_from_snr(1.0)) == pytest.approx(5.4207, abs=1e-3)
    assert ebn0_from_snr(10.0) > ebn0_from_snr(1.0)
    with pytest.raises(ValueError):
        ebn0_from_snr(0.0)


def test_ebn0_low_snr_approach_is_sqrt_rate():
    # The gap to ln 2 decays like (4/3) * ln 2 * sqrt(2 pi snr): still 2.3e-3
    # at snr = 1e-6, and only at much smaller snr does it dip below 1e-4.
    # Deep-tail probes need a tighter residual tolerance because the default
    # is absolute for inverse-map arguments below 1.
    ln2 = math.log(2.0)
    assert ebn0_from_snr(1e-6) == pytest.approx(oracles.EBN0_SNR_1E6, rel=1e-10)
    gap_1e6 = ebn0_from_snr(1e-6) - ln2
    assert gap_1e6 == pytest.approx((4.0 / 3.0) * ln2 * math.sqrt(2 * math.pi * 1e-6), rel=0.02)
    from heatcap import ToleranceConfig

    tight = ToleranceConfig(rel_tol=1e-13)
    assert abs(ebn0_from_snr(1e-9, tight) - ln2) <= 1e-4


def test_per_transmission_identity():
    for geom in (HeatChannelGeometry(50e-12, 200e9), HeatChannelGeometry(2.0, 8.0, 3.0)):
        for snr in np.logspace(-3, 3, 25):
            snr = float(snr)
            lhs = rate_bits_per_second(geom, snr) * geom.duration
            rhs = capacity_closed_form(geom, snr_to_energy(geom, snr)) * LOG2E
            assert lhs == pytest.approx(rhs, rel=1e-12)


def test_parametric_identity_bandwidth_cancels():
    for geom in (HeatChannelGeometry(50e-12, 200e9), HeatChannelGeometry(1.0, 3.0, 0.5)):
        for snr in np.logspace(-3, 3, 121):
            snr = float(snr)
            assert spectral_efficiency(snr) == pytest.approx(
                rate_bits_per_second(geom, snr) / geom.bandwidth, rel=1e-12
            )


def test_three_method_agreement():
    geom = HeatChannelGeometry(1.0, 10.0, 1.0)
    energy = 2000.0 * 0.5 * geom.tbp
    report = compute_capacity_report(geom, energy, "all")
    assert report.relative_spread <= 1e-2
    wide = HeatChannelGeometry(1.0, 1000.0, 1.0)
    report_wide = compute_capacity_report(wide, 2000.0 * 0.5 * wide.tbp, "all")
    assert report_wide.relative_spread <= 1e-3


def test_scale_invariance_is_exact():
    base = HeatChannelGeometry(1.0, 10.0, 1.0)
    doubled = HeatChannelGeometry(1.0, 10.0, 2.0)
    for energy in (1.0, 40.0, 1e4):
        assert capacity_closed_form(base, energy) == capacity_closed_form(doubled, 2 * energy)
        r1 = capacity_exact_discrete(base, energy)
        r2 = capacity_exact_discrete(doubled, 2 * energy)
        assert r1.capacity_nats == r2.capacity_nats
        assert r1.active_count == r2.active_count
        assert r1.water_level * 2 == r2.water_level


def test_quadrature_consistent_with_discrete(ref_geom, ref_energy):
    quad = waterfill_quadrature_2d(ref_geom, ref_energy).capacity_nats
    disc = capacity_exact_discrete(ref_geom, ref_energy).capacity_nats
    assert abs(quad - disc) / quad <= 1e-2


def test_capacity_report_surface():
    geom = HeatChannelGeometry(1.0, 10.0, 1.0)
    report = compute_capacity_report(geom, 100.0, "closed")
    assert report.discrete is None
    assert report.quadrature_nats is None
    assert report.relative_spread == 0.0
    assert report.closed_form_bits == pytest.approx(report.closed_form_nats * LOG2E)
    with pytest.raises(ValueError):
        compute_capacity_report(geom, 1.0, "bogus")
    empty = CapacityReport()
    assert empty.values_nats == {}
    assert empty.closed_form_bits is None
