"""Curve artifact emission: CSV, JSON, and self-contained SVG.

All numeric cells are written with 13 significant digits, which keeps the
files byte-stable across runs while guaranteeing the documented 1e-12
relative round-trip bound (12 digits would allow up to 5e-12 of rounding on
a leading digit of 1). SVG output is a fixed 800x600 viewport with inline
styling and no external assets.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from datetime import datetime, timezone

from .curves import CurvePoint

__all__ = [
    "CSV_COLUMNS",
    "SeriesSpec",
    "AxesSpec",
    "snr_axes",
    "ebn0_axes",
    "emit_csv",
    "emit_json",
    "emit_svg",
    "read_csv",
]

CSV_COLUMNS = (
    "snr_db",
    "snr",
    "se_heat",
    "se_awgn",
    "se_gallager",
    "ebn0_heat_db",
    "ebn0_awgn_db",
)

_COLORS = ("#1f77b4", "#d62728", "#2ca02c")


def _fmt(value: float | None) -> str:
    return "" if value is None else format(value, ".13g")


def _round13(value: float | None) -> float | None:
    return None if value is None else float(format(value, ".13g"))


def _require_points(points: list[CurvePoint]) -> None:
    if not points:
        raise ValueError("no curve points to emit")


def emit_csv(points: list[CurvePoint], path) -> None:
    """Write the sweep as UTF-8 CSV with LF line endings and a header row."""
    _require_points(points)
    lines = [",".join(CSV_COLUMNS)]
    for p in points:
        lines.append(",".join(_fmt(getattr(p, col)) for col in CSV_COLUMNS))
    data = "\n".join(lines) + "\n"
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(data)


def read_csv(path) -> list[CurvePoint]:
    """Parse a CSV produced by emit_csv back into curve points."""
    points = []
    with open(path, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
            raise ValueError(f"unexpected CSV columns: {reader.fieldnames!r}")
        for row in reader:
            points.append(
                CurvePoint(
                    snr_db=float(row["snr_db"]),
                    snr=float(row["snr"]),
                    se_heat=float(row["se_heat"]),
                    se_awgn=float(row["se_awgn"]),
                    se_gallager=float(row["se_gallager"]) if row["se_gallager"] else None,
                    ebn0_heat_db=float(row["ebn0_heat_db"]),
                    ebn0_awgn_db=float(row["ebn0_awgn_db"]),
                )
            )
    return points


def emit_json(
    points: list[CurvePoint],
    path,
    metadata: dict | None = None,
    deterministic: bool = False,
) -> None:
    """Write points plus generation metadata as a single JSON object.

    The metadata carries whatever the caller provides (parameters,
    tolerances, version); a UTC timestamp is added unless ``deterministic``
    is set.
    """
    _require_points(points)
    meta = dict(metadata or {})
    if not deterministic:
        meta["generated_at"] = datetime.now(timezone.utc).isoformat()
    obj = {
        "metadata": meta,
        "points": [
            {col: _round13(getattr(p, col)) for col in CSV_COLUMNS} for p in points
        ],
    }
    with open(path, "w", encoding="utf-8", newline="") as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")


@dataclass(frozen=True)
class SeriesSpec:
    """One polyline: which point fields provide x and y, and its legend label."""

    x_field: str
    y_field: str
    label: str


@dataclass(frozen=True)
class AxesSpec:
    """Axes and series layout for an SVG rendering."""

    title: str
    x_label: str
    y_label: str
    series: tuple[SeriesSpec, ...]
    x_log: bool = False
    y_log: bool = False


def snr_axes(include_gallager: bool = False) -> AxesSpec:
    """C/W against SNR (dB axis, linear spectral efficiency)."""
    series = [
        SeriesSpec("snr_db", "se_heat", "heat channel"),
        SeriesSpec("snr_db", "se_awgn", "AWGN"),
    ]
    if include_gallager:
        series.append(SeriesSpec("snr_db", "se_gallager", "Gaussian filter (illustrative)"))
    return AxesSpec(
        title="Spectral efficiency vs SNR",
        x_label="SNR [dB]",
        y_label="C/W [bit/s/Hz]",
        series=tuple(series),
    )


def ebn0_axes() -> AxesSpec:
    """C/W against Eb/N0, parametric in snr for each channel."""
    return AxesSpec(
        title="Spectral efficiency vs Eb/N0",
        x_label="Eb/N0 [dB]",
        y_label="C/W [bit/s/Hz]",
        series=(
            SeriesSpec("ebn0_heat_db", "se_heat", "heat channel"),
            SeriesSpec("ebn0_awgn_db", "se_awgn", "AWGN"),
        ),
    )


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    norm = raw / mag
    if norm < 1.5:
        factor = 1.0
    elif norm < 3.5:
        factor = 2.0
    elif norm < 7.5:
        factor = 5.0
    else:
        factor = 10.0
    return factor * mag


def _ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9) * step
    ticks = []
    v = first
    while v <= hi + 1e-9 * step:
        ticks.append(0.0 if abs(v) < 1e-12 * step else v)
        v += step
    return ticks


def _tick_label(value: float) -> str:
    return format(value, ".6g")


def emit_svg(points: list[CurvePoint], axes: AxesSpec, path) -> None:
    """Render the selected series as a standalone SVG 1.1 document."""
    _require_points(points)

    def transform(field: str, value: float) -> float:
        log = axes.x_log if field.startswith(("snr", "ebn0")) else axes.y_log
        if log:
            if value <= 0.0:
                raise ValueError(f"log axis cannot show nonpositive value {value!r}")
            return math.log10(value)
        return value

    series_xy: list[tuple[SeriesSpec, list[tuple[float, float]]]] = []
    for s in axes.series:
        xy = []
        for p in points:
            x = getattr(p, s.x_field)
            y = getattr(p, s.y_field)
            if x is None or y is None:
                continue
            xy.append((transform(s.x_field, x), transform(s.y_field, y)))
        if xy:
            series_xy.append((s, xy))
    if not series_xy:
        raise ValueError("no drawable series (all values missing)")

    xs = [x for _, xy in series_xy for x, _ in xy]
    ys = [y for _, xy in series_xy for _, y in xy]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(0.0, min(ys)), max(ys)
    if x_hi == x_lo:
        x_hi = x_lo + 1.0
    if y_hi == y_lo:
        y_hi = y_lo + 1.0
    # pad the top so curves do not touch the frame
    y_hi += 0.05 * (y_hi - y_lo)

    width, height = 800, 600
    ml, mr, mt, mb = 70, 20, 40, 50
    pw, ph = width - ml - mr, height - mt - mb

    def px(x: float) -> float:
        return ml + (x - x_lo) / (x_hi - x_lo) * pw

    def py(y: float) -> float:
        return mt + ph - (y - y_lo) / (y_hi - y_lo) * ph

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">'
    )
    out.append(f'<rect width="{width}" height="{height}" fill="#ffffff"/>')
    out.append(
        f'<text x="{width / 2:.2f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{axes.title}</text>'
    )

    # grid and ticks
    for t in _ticks(x_lo, x_hi):
        x = px(t)
        out.append(
            f'<line x1="{x:.2f}" y1="{mt}" x2="{x:.2f}" y2="{mt + ph}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        label = _tick_label(10.0**t if axes.x_log else t)
        out.append(
            f'<text x="{x:.2f}" y="{mt + ph + 18}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{label}</text>'
        )
    for t in _ticks(y_lo, y_hi):
        y = py(t)
        out.append(
            f'<line x1="{ml}" y1="{y:.2f}" x2="{ml + pw}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        label = _tick_label(10.0**t if axes.y_log else t)
        out.append(
            f'<text x="{ml - 6}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{label}</text>'
        )

    out.append(
        f'<rect x="{ml}" y="{mt}" width="{pw}" height="{ph}" '
        f'fill="none" stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<text x="{ml + pw / 2:.2f}" y="{height - 12}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13">{axes.x_label}</text>'
    )
    out.append(
        f'<text x="18" y="{mt + ph / 2:.2f}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="13" '
        f'transform="rotate(-90 18 {mt + ph / 2:.2f})">{axes.y_label}</text>'
    )

    for i, (s, xy) in enumerate(series_xy):
        color = _COLORS[i % len(_COLORS)]
        coords = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in xy)
        out.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        ly = mt + 18 + 18 * i
        out.append(
            f'<line x1="{ml + 12}" y1="{ly - 4}" x2="{ml + 40}" y2="{ly - 4}" '
            f'stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{ml + 46}" y="{ly}" font-family="sans-serif" '
            f'font-size="12">{s.label}</text>'
        )

    out.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write("\n".join(out) + "\n")
