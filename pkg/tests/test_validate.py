import time

from heatcap.validate import format_report, run_all


def test_fresh_build_passes_quickly():
    start = time.perf_counter()
    results = run_all()
    elapsed = time.perf_counter() - start
    failed = [r.name for r in results if not r.passed]
    assert not failed, f"failing checks: {failed}"
    assert elapsed < 30.0
    assert len(results) >= 20


def test_report_mentions_reference_residual():
    report = format_report(run_all())
    assert "64.59" in report
    assert "residual gap" in report
    assert "checks passed" in report


def test_perturbation_hook_is_detected():
    results = run_all(w0_scale=1.01)
    assert any(not r.passed for r in results)
    # the round-trip check in particular must catch a skewed inverse
    round_trip = next(r for r in results if "round trip" in r.name)
    assert not round_trip.passed
