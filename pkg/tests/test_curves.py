import json
import math
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from heatcap import (
    GaussianFilterSpec,
    SweepSpec,
    ebn0_axes,
    emit_csv,
    emit_json,
    emit_svg,
    read_csv,
    snr_axes,
    sweep_ebn0_curve,
    sweep_snr_curve,
)
from heatcap.emit import CSV_COLUMNS

import oracles

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_SWEEP = SweepSpec(-30.0, 30.0, 16)

LN2_DB = 10.0 * math.log10(math.log(2.0))


def test_sweep_spec_validation():
    with pytest.raises(ValueError):
        SweepSpec(0.0, 0.0, 10)
    with pytest.raises(ValueError):
        SweepSpec(-10.0, 10.0, 1)
    with pytest.raises(ValueError):
        SweepSpec(-10.0, 10.0, 10, spacing="linear")


def test_default_sweep_samples():
    points = sweep_snr_curve()
    assert len(points) == 121
    assert points[0].snr_db == -30.0
    assert points[-1].snr_db == 30.0
    dbs = [p.snr_db for p in points]
    steps = {round(b - a, 9) for a, b in zip(dbs, dbs[1:])}
    assert steps == {0.5}


def test_point_values_at_zero_db():
    points = sweep_snr_curve(SweepSpec(0.0, 1.0, 2))
    p = points[0]
    assert p.snr == pytest.approx(1.0, rel=1e-15)
    assert p.se_heat == pytest.approx(oracles.SE_SNR1, rel=1e-12)
    assert p.se_awgn == pytest.approx(1.0, rel=1e-14)
    assert p.se_gallager is None
    assert p.ebn0_heat_db == pytest.approx(10 * math.log10(oracles.EBN0_SNR1), rel=1e-12)
    assert p.ebn0_awgn_db == pytest.approx(0.0, abs=1e-12)


def test_point_at_reference_snr():
    db = 10.0 * math.log10(1000.0 / (2.0 * math.pi))
    points = sweep_snr_curve(SweepSpec(db, db + 1.0, 2))
    assert points[0].se_heat == pytest.approx(oracles.SE_EXAMPLE_SNR, rel=1e-12)


def test_low_snr_tail_of_parametric_curve():
    # At snr = 1e-6 the heat channel's Eb/N0 is still 2.3e-3 above ln 2 (the
    # approach is O(sqrt(snr))), i.e. -1.5773 dB rather than -1.5917 dB.
    points = sweep_ebn0_curve(SweepSpec(-60.0, -50.0, 2))
    expected_db = 10.0 * math.log10(oracles.EBN0_SNR_1E6)
    assert points[0].ebn0_heat_db == pytest.approx(expected_db, abs=1e-9)
    assert points[0].ebn0_heat_db == pytest.approx(-1.5773, abs=1e-3)
    assert points[0].ebn0_awgn_db == pytest.approx(LN2_DB, abs=1e-5)


def test_curve_invariants_over_default_sweep():
    points = sweep_snr_curve()
    se = [p.se_heat for p in points]
    assert all(b > a for a, b in zip(se, se[1:]))
    for p in points:
        assert p.se_heat <= p.se_awgn
        assert p.ebn0_heat_db >= LN2_DB - 1e-3
        assert p.ebn0_awgn_db >= LN2_DB - 1e-3
    # the Eb/N0 floor is approached from above as snr decreases
    assert points[0].ebn0_heat_db == min(p.ebn0_heat_db for p in points)


def test_snr_and_ebn0_sweeps_share_samples():
    spec = SweepSpec(-5.0, 5.0, 11)
    assert sweep_snr_curve(spec) == sweep_ebn0_curve(spec)


def test_gallager_column_populated():
    spec = SweepSpec(-5.0, 5.0, 3)
    points = sweep_snr_curve(spec, GaussianFilterSpec(1.0, 2.0))
    assert all(p.se_gallager is not None and p.se_gallager > 0 for p in points)


def test_csv_schema_and_round_trip(tmp_path):
    points = sweep_snr_curve(SweepSpec(-10.0, 10.0, 9))
    path = tmp_path / "curve.csv"
    emit_csv(points, path)
    raw = path.read_bytes()
    assert b"\r" not in raw
    header = raw.decode().splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)
    assert len(raw.decode().splitlines()) == 1 + 9
    # gallager column stays empty when the comparison is off
    first_row = raw.decode().splitlines()[1].split(",")
    assert first_row[4] == ""

    parsed = read_csv(path)
    assert len(parsed) == len(points)
    for before, after in zip(points, parsed):
        for col in CSV_COLUMNS:
            a, b = getattr(before, col), getattr(after, col)
            if a is None:
                assert b is None
            else:
                assert b == pytest.approx(a, rel=1e-12)


def test_csv_emission_is_deterministic(tmp_path):
    points = sweep_snr_curve(SweepSpec(-3.0, 3.0, 7))
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_csv(points, p1)
    emit_csv(points, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_empty_points_rejected(tmp_path):
    with pytest.raises(ValueError):
        emit_csv([], tmp_path / "x.csv")


def test_json_mirrors_columns_and_handles_timestamp(tmp_path):
    points = sweep_snr_curve(SweepSpec(-3.0, 3.0, 5))
    meta = {"tool": "heatcap", "sweep": {"points": 5}}
    det = tmp_path / "det.json"
    emit_json(points, det, meta, deterministic=True)
    det2 = tmp_path / "det2.json"
    emit_json(points, det2, meta, deterministic=True)
    assert det.read_bytes() == det2.read_bytes()

    obj = json.loads(det.read_text())
    assert set(obj) == {"metadata", "points"}
    assert "generated_at" not in obj["metadata"]
    assert obj["metadata"]["sweep"] == {"points": 5}
    assert len(obj["points"]) == 5
    for rec, point in zip(obj["points"], points):
        assert set(rec) == set(CSV_COLUMNS)
        assert rec["se_heat"] == pytest.approx(point.se_heat, rel=1e-12)
        assert rec["se_gallager"] is None

    stamped = tmp_path / "stamped.json"
    emit_json(points, stamped, meta, deterministic=False)
    assert "generated_at" in json.loads(stamped.read_text())["metadata"]


def test_svg_structure(tmp_path):
    points = sweep_snr_curve(SweepSpec(-10.0, 10.0, 9), GaussianFilterSpec(1.0, 2.0))
    path = tmp_path / "fig.svg"
    emit_svg(points, snr_axes(include_gallager=True), path)
    root = ET.fromstring(path.read_text())
    assert root.tag.endswith("svg")
    assert root.attrib["width"] == "800" and root.attrib["height"] == "600"
    polylines = [el for el in root.iter() if el.tag.endswith("polyline")]
    assert len(polylines) == 3

    ebn0_path = tmp_path / "fig3.svg"
    emit_svg(points, ebn0_axes(), ebn0_path)
    root3 = ET.fromstring(ebn0_path.read_text())
    assert len([el for el in root3.iter() if el.tag.endswith("polyline")]) == 2


def test_golden_csv(tmp_path):
    points = sweep_snr_curve(GOLDEN_SWEEP)
    path = tmp_path / "fig2.csv"
    emit_csv(points, path)
    assert path.read_bytes() == (DATA_DIR / "fig2_16pt.csv").read_bytes()


def test_golden_svg(tmp_path):
    points = sweep_snr_curve(GOLDEN_SWEEP)
    path = tmp_path / "fig2.svg"
    emit_svg(points, snr_axes(), path)
    assert path.read_bytes() == (DATA_DIR / "fig2_16pt.svg").read_bytes()
