"""Command-line entry point.

Subcommands: ``w0`` (inverse-map evaluation), ``capacity`` (single-shot
capacity by any method), ``example`` (reference-example reproduction),
``curve`` (CSV/JSON/SVG curve artifacts), and ``validate`` (the invariant
suite). Exit codes are stable: 0 success, 1 failed verdict or numerical
failure, 2 usage or domain error, 3 output I/O error.

Defaults can come from a config file of ``key = value`` lines (``#`` starts
a comment line), selected with --config or the HEATCAP_CONFIG environment
variable; explicit flags always win over config values.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import __version__
from .baselines import GaussianFilterSpec
from .channel import (
    capacity_closed_form,
    capacity_exact_discrete,
    CapacityReport,
    snr_to_energy,
)
from .errors import ConvergenceError, DivergenceError, PrecisionError
from .curves import SweepSpec, sweep_snr_curve
from .emit import ebn0_axes, emit_csv, emit_json, emit_svg, snr_axes
from .geometry import HeatChannelGeometry
from .validate import REFERENCE_EXAMPLE, format_report, run_all
from .w0 import ToleranceConfig, w0
from .waterfill import QuadratureSpec, waterfill_quadrature_2d

_LOG2E = math.log2(math.e)


class _OutputIOError(Exception):
    """Internal marker: an output file could not be written (exit code 3)."""

# Keys a config file may define, with their parsers. Flags share these names
# (dashes and underscores are interchangeable in the file).
_CONFIG_KEYS = {
    "alpha": float,
    "beta": float,
    "theta2": float,
    "snr": float,
    "snr_db": float,
    "s_energy": float,
    "method": str,
    "fig": int,
    "snr_min_db": float,
    "snr_max_db": float,
    "points": int,
    "gallager": "bool",
    "beta_g": float,
    "n0_g": float,
    "deterministic": "bool",
    "rel_tol": float,
    "max_iter": int,
    "abs_tol": float,
}

_FALLBACKS = {
    "theta2": 1.0,
    "method": "all",
    "snr_min_db": -30.0,
    "snr_max_db": 30.0,
    "points": 121,
    "gallager": False,
    "beta_g": 200e9,
    "n0_g": 2.0,
    "deterministic": False,
    "rel_tol": 1e-12,
    "max_iter": 200,
    "abs_tol": 1e-10,
}


def _parse_bool(text: str) -> bool:
    lowered = text.strip().lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


def _load_config(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key = key.strip().lower().replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise ValueError(f"{path}:{lineno}: unknown config key {key!r}")
            parser = _CONFIG_KEYS[key]
            try:
                values[key] = _parse_bool(value) if parser == "bool" else parser(value.strip())
            except ValueError as exc:
                raise ValueError(f"{path}:{lineno}: bad value for {key}: {exc}") from exc
    return values


def _merge_config(args: argparse.Namespace, config: dict) -> dict:
    """Fill unset options from the config file, then from hard defaults.

    Returns the effective configuration (only keys the command knows about),
    which curve/capacity JSON outputs echo back.
    """
    effective = {}
    for key in _CONFIG_KEYS:
        if not hasattr(args, key):
            continue
        value = getattr(args, key)
        if value is None and key in config:
            value = config[key]
        if value is None and key in _FALLBACKS:
            value = _FALLBACKS[key]
        setattr(args, key, value)
        effective[key] = value
    return effective


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heatcap",
        description="Heat-channel capacity calculator and curve generator.",
    )
    parser.add_argument("--version", action="version", version=f"heatcap {__version__}")
    parser.add_argument(
        "--config",
        help="config file of key = value lines (HEATCAP_CONFIG is the fallback)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_w0 = sub.add_parser(
        "w0",
        help="evaluate the inverse of y = (2x - 1) e^(2x) + 1",
        description="Print w0(y), the x >= 0 solving (2x - 1) e^(2x) + 1 = y, "
        "to 15 significant digits.",
    )
    p_w0.add_argument("y", type=float)
    p_w0.add_argument("--rel-tol", type=float, dest="rel_tol")
    p_w0.add_argument("--max-iter", type=int, dest="max_iter")

    p_cap = sub.add_parser(
        "capacity",
        help="capacity of one (geometry, energy) point by the selected methods",
        description="Capacity per transmission of the heat channel: closed form "
        "(alpha*beta/2)*w0(S/((alpha*beta/2)*theta2))^2 nats, discrete eigenmode "
        "water-filling, and 2-D time-frequency quadrature.",
    )
    p_cap.add_argument("--alpha", type=float, help="time scale in seconds")
    p_cap.add_argument("--beta", type=float, help="frequency scale in Hz")
    p_cap.add_argument("--theta2", type=float, help="noise parameter (default 1)")
    p_cap.add_argument("--snr", type=float, help="linear SNR = P/(W*N0)")
    p_cap.add_argument("--snr-db", type=float, dest="snr_db", help="SNR in dB")
    p_cap.add_argument("--s-energy", type=float, dest="s_energy", help="input energy S directly")
    p_cap.add_argument("--method", choices=("closed", "discrete", "quadrature", "all"))
    p_cap.add_argument("--json", action="store_true", default=None, help="machine-readable output")
    p_cap.add_argument("--rel-tol", type=float, dest="rel_tol")
    p_cap.add_argument("--max-iter", type=int, dest="max_iter")
    p_cap.add_argument("--abs-tol", type=float, dest="abs_tol")

    p_ex = sub.add_parser(
        "example",
        help="reproduce the reference example (K=30, C=64.59 bits)",
        description="Run the reference point alpha = 50 ps, beta = 200 GHz, "
        "snr = 1000/(2*pi), and compare against the reference values K = 30 and "
        "C = 64.59 bits per transmission.",
    )
    p_ex.add_argument("--json", action="store_true", default=None)

    p_curve = sub.add_parser(
        "curve",
        help="generate spectral-efficiency curves (CSV/JSON/SVG)",
        description="Sweep SNR linearly in dB, computing C/W for the heat "
        "channel ((1/2pi) w0(4*pi*snr)^2 log2 e), the AWGN baseline "
        "log2(1 + snr), and optionally the Gaussian-filter comparison. "
        "Figure 2 plots C/W against SNR, figure 3 against Eb/N0.",
    )
    p_curve.add_argument("--fig", type=int, choices=(2, 3), help="which figure's axes to use")
    p_curve.add_argument(
        "--out",
        action="append",
        dest="outputs",
        metavar="PATH",
        help="output file; format from extension (.csv/.json/.svg); repeatable",
    )
    p_curve.add_argument("--snr-min-db", type=float, dest="snr_min_db")
    p_curve.add_argument("--snr-max-db", type=float, dest="snr_max_db")
    p_curve.add_argument("--points", type=int)
    p_curve.add_argument("--gallager", action="store_true", default=None,
                         help="add the Gaussian-filter comparison column/series")
    p_curve.add_argument("--beta-g", type=float, dest="beta_g", help="filter frequency scale in Hz")
    p_curve.add_argument("--n0-g", type=float, dest="n0_g", help="filter channel one-sided noise PSD")
    p_curve.add_argument("--deterministic", action="store_true", default=None,
                         help="suppress timestamps for byte-stable outputs")
    p_curve.add_argument("--rel-tol", type=float, dest="rel_tol")
    p_curve.add_argument("--max-iter", type=int, dest="max_iter")
    p_curve.add_argument("--abs-tol", type=float, dest="abs_tol")

    p_val = sub.add_parser(
        "validate",
        help="run the cross-method invariant suite",
        description="Execute every invariant check (inverse-map round trip, "
        "quadrature against the closed form, discrete-ladder convergence, "
        "rate identities, baselines) and report per-check tolerances and "
        "observed errors.",
    )
    p_val.add_argument(
        "--perturb",
        type=float,
        default=None,
        help="testing hook: scale applied to the inverse map inside the checks "
        "(HEATCAP_VALIDATE_PERTURB is the env equivalent); anything != 1 must fail",
    )

    return parser


def _tolerances(args: argparse.Namespace) -> ToleranceConfig:
    return ToleranceConfig(rel_tol=args.rel_tol, max_iter=args.max_iter)


def _cmd_w0(args: argparse.Namespace) -> int:
    value = w0(args.y, _tolerances(args))
    print(f"{value:.15g}")
    return 0


def _capacity_rows(args: argparse.Namespace):
    geom = HeatChannelGeometry(args.alpha, args.beta, args.theta2)
    given = [name for name in ("snr", "snr_db", "s_energy") if getattr(args, name) is not None]
    if len(given) != 1:
        raise ValueError(
            f"exactly one of --snr, --snr-db, --s-energy must be given (got {given or 'none'})"
        )
    if args.s_energy is not None:
        energy = float(args.s_energy)
        if not energy >= 0.0:
            raise ValueError(f"s_energy must be >= 0, got {energy!r}")
        snr = energy / (2.0 * math.pi * geom.tbp * geom.theta2)
    else:
        snr = float(args.snr) if args.snr is not None else 10.0 ** (args.snr_db / 10.0)
        energy = snr_to_energy(geom, snr)

    tol = _tolerances(args)
    quad_spec = QuadratureSpec(abs_tol=args.abs_tol)
    closed = discrete = quadrature = None
    if args.method in ("closed", "all"):
        closed = capacity_closed_form(geom, energy, tol)
    if args.method in ("discrete", "all"):
        discrete = capacity_exact_discrete(geom, energy, tol)
    if args.method in ("quadrature", "all"):
        quadrature = waterfill_quadrature_2d(geom, energy, quad_spec, tol=tol)
    return geom, snr, energy, closed, discrete, quadrature


def _cmd_capacity(args: argparse.Namespace, effective: dict) -> int:
    if args.alpha is None or args.beta is None:
        raise ValueError("--alpha and --beta are required (flags or config file)")
    geom, snr, energy, closed, discrete, quadrature = _capacity_rows(args)
    report = CapacityReport(
        closed,
        discrete,
        None if quadrature is None else quadrature.capacity_nats,
    )

    if args.json:
        results: dict = {}
        if closed is not None:
            results["closed"] = {"nats": closed, "bits": closed * _LOG2E}
        if discrete is not None:
            results["discrete"] = {
                "nats": discrete.capacity_nats,
                "bits": discrete.capacity_bits,
                "water_level": discrete.water_level,
                "active_modes": discrete.active_count,
            }
        if quadrature is not None:
            results["quadrature"] = {
                "nats": quadrature.capacity_nats,
                "bits": quadrature.capacity_bits,
                "water_level": quadrature.water_level,
            }
        print(json.dumps({
            "config": effective,
            "snr": snr,
            "energy": energy,
            "results": results,
            "max_relative_spread": report.relative_spread,
        }, indent=2, sort_keys=True))
        return 0

    print("parameters")
    print(f"  alpha   {geom.alpha:g} s")
    print(f"  beta    {geom.beta:g} Hz")
    print(f"  theta2  {geom.theta2:g}")
    print(f"  tbp     {geom.tbp:g}")
    print(f"  snr     {snr:.12g}")
    print(f"  energy  {energy:.12g}")
    print("method       C [nats]            C [bits]            water level      K")
    if closed is not None:
        print(f"closed       {closed:<19.12g} {closed * _LOG2E:<19.12g} {'-':<16} -")
    if discrete is not None:
        print(
            f"discrete     {discrete.capacity_nats:<19.12g} {discrete.capacity_bits:<19.12g} "
            f"{discrete.water_level:<16.10g} {discrete.active_count}"
        )
    if quadrature is not None:
        print(
            f"quadrature   {quadrature.capacity_nats:<19.12g} {quadrature.capacity_bits:<19.12g} "
            f"{quadrature.water_level:<16.10g} -"
        )
    if len(report.values_nats) > 1:
        print(f"max pairwise relative spread: {report.relative_spread:.3e}")
    return 0


def _cmd_example(args: argparse.Namespace) -> int:
    ref = REFERENCE_EXAMPLE
    geom = HeatChannelGeometry(ref["alpha"], ref["beta"], ref["theta2"])
    energy = snr_to_energy(geom, ref["snr"])
    result = capacity_exact_discrete(geom, energy)
    closed_bits = capacity_closed_form(geom, energy) * _LOG2E
    bits = result.capacity_bits
    residual = abs(bits - ref["bits_reference"]) / ref["bits_reference"]
    passed = result.active_count == ref["k_reference"] and residual <= ref["bits_rel_bound"]

    if args.json:
        print(json.dumps({
            "alpha": ref["alpha"],
            "beta": ref["beta"],
            "snr": ref["snr"],
            "computed": {
                "active_modes": result.active_count,
                "bits": bits,
                "nats": result.capacity_nats,
                "water_level": result.water_level,
                "closed_form_bits": closed_bits,
            },
            "reference": {"active_modes": ref["k_reference"], "bits": ref["bits_reference"]},
            "relative_error": residual,
            "bound": ref["bits_rel_bound"],
            "passed": passed,
        }, indent=2, sort_keys=True))
    else:
        print("reference example: alpha = 50 ps, beta = 200 GHz, snr = 1000/(2*pi) = "
              f"{ref['snr']:.4f}")
        print(f"  computed:  K = {result.active_count}, C = {bits:.4f} bits per transmission "
              f"({result.capacity_nats:.4f} nats, water level {result.water_level:.4f})")
        print(f"  reference: K = {ref['k_reference']}, C = {ref['bits_reference']:.2f} bits "
              "per transmission")
        print(f"  relative error in C: {residual:.4%} (bound {ref['bits_rel_bound']:.2%})")
        print(f"  closed form (leading order): {closed_bits:.4f} bits")
        print(f"verdict: {'PASS' if passed else 'FAIL'}")
    return 0 if passed else 1


def _cmd_curve(args: argparse.Namespace, effective: dict) -> int:
    if args.fig is None:
        raise ValueError("--fig is required (2 for C/W vs SNR, 3 for C/W vs Eb/N0)")
    if not args.outputs:
        raise ValueError("at least one --out PATH is required")
    sweep = SweepSpec(args.snr_min_db, args.snr_max_db, args.points)
    gallager = GaussianFilterSpec(args.beta_g, args.n0_g) if args.gallager else None
    tol = _tolerances(args)
    points = sweep_snr_curve(sweep, gallager, tol)

    metadata = {
        "tool": "heatcap",
        "version": __version__,
        "figure": args.fig,
        "figure_kind": "se_vs_snr" if args.fig == 2 else "se_vs_ebn0",
        "sweep": {
            "snr_min_db": sweep.snr_min_db,
            "snr_max_db": sweep.snr_max_db,
            "points": sweep.points,
            "spacing": sweep.spacing,
        },
        "axes": {
            "x": "SNR [dB]" if args.fig == 2 else "Eb/N0 [dB]",
            "y": "C/W [bit/s/Hz] (linear scale)",
            "note": "snr values are linear; dB columns are 10*log10 of them",
        },
        "tolerances": {"rel_tol": args.rel_tol, "max_iter": args.max_iter,
                       "abs_tol": args.abs_tol},
        "gallager": None if gallager is None else {
            "beta_g": gallager.beta_g,
            "n0": gallager.n0,
            "exponent_coeff": gallager.exponent_coeff,
            "snr_convention": "snr = P / ((beta_g/2) * n0)",
            "note": "illustrative comparison; the filter parameterization is a modeling choice",
        },
        "effective_config": effective,
    }

    axes = snr_axes(include_gallager=gallager is not None) if args.fig == 2 else ebn0_axes()
    for path in args.outputs:
        lowered = str(path).lower()
        try:
            if lowered.endswith(".csv"):
                emit_csv(points, path)
            elif lowered.endswith(".json"):
                emit_json(points, path, metadata, deterministic=bool(args.deterministic))
            elif lowered.endswith(".svg"):
                emit_svg(points, axes, path)
            else:
                raise ValueError(f"cannot infer format from {path!r} (use .csv/.json/.svg)")
        except OSError as exc:
            raise _OutputIOError(f"cannot write {path}: {exc}") from exc
        print(f"wrote {path}")
    return 0


def _cmd_validate(args: argparse.Namespace) -> int:
    scale = args.perturb
    if scale is None:
        scale = float(os.environ.get("HEATCAP_VALIDATE_PERTURB", "1.0"))
    results = run_all(w0_scale=scale)
    print(format_report(results))
    return 0 if all(r.passed for r in results) else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config_path = args.config or os.environ.get("HEATCAP_CONFIG")
        config = _load_config(config_path) if config_path else {}
        effective = _merge_config(args, config)

        if args.command == "w0":
            return _cmd_w0(args)
        if args.command == "capacity":
            return _cmd_capacity(args, effective)
        if args.command == "example":
            return _cmd_example(args)
        if args.command == "curve":
            return _cmd_curve(args, effective)
        if args.command == "validate":
            return _cmd_validate(args)
        raise ValueError(f"unknown command {args.command!r}")
    except _OutputIOError as exc:
        print(f"heatcap: output error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"heatcap: error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, DivergenceError, PrecisionError) as exc:
        print(f"heatcap: numerical failure: {exc}", file=sys.stderr)
        return 1


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
