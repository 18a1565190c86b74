"""Command line front end.

    hullmap fit      --input sec.txt --n 12 [--sigma-e 1e-4] [--out DIR] [--emit json,csv,svg]
    hullmap search   --input sec.txt [--out DIR] [--emit ...]
    hullmap evaluate --input coeffs.json [--samples 256] [--out DIR] [--emit ...]
    hullmap lewis    --input sec.txt [--out DIR] [--emit ...]

Exit codes: 0 success, 2 usage, 3 parse or validation failure, 4 fit
divergence, 5 search failure.  With --no-timing all reported wall times are
written as 0.0 so repeated runs emit byte-identical files.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from math import pi
from pathlib import Path

import numpy as np

from .errors import (
    HullmapError,
    OffsetsParseError,
    SearchFailedError,
    SectionValidationError,
)
from .fit import FitConfig, fit_section
from .mapping import MappingCoefficients, breadth_and_draft, evaluate_boundary, lewis_initial_guess
from .report import AccuracyReport, build_report, nash_sutcliffe
from .search import search_optimum
from .section import SectionOffsets, full_area, load_offsets

DEFAULT_SAMPLES = 256


@dataclass(frozen=True)
class RunSpec:
    mode: str
    input_path: Path
    order: int | None
    tolerance: float | None
    out_dir: Path
    emit: tuple[str, ...]
    samples: int
    timing: bool


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hullmap",
        description="Fit conformal mapping coefficients to 2D ship sections.",
    )
    sub = parser.add_subparsers(dest="mode", required=True)
    for mode in ("fit", "search", "evaluate", "lewis"):
        p = sub.add_parser(mode)
        p.add_argument("--input", required=True, type=Path)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--sigma-e", type=float, default=None)
        p.add_argument("--out", type=Path, default=Path("."))
        p.add_argument("--emit", default="json")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--no-timing", action="store_true")
    return parser


def _spec_from_args(args: argparse.Namespace) -> RunSpec:
    emit = tuple(part.strip() for part in args.emit.split(",") if part.strip())
    bad = [e for e in emit if e not in ("json", "csv", "svg")]
    if bad:
        raise ValueError(f"unknown emit format(s): {', '.join(bad)}")
    return RunSpec(
        mode=args.mode,
        input_path=args.input,
        order=args.n,
        tolerance=args.sigma_e,
        out_dir=args.out,
        emit=emit or ("json",),
        samples=args.samples,
        timing=not args.no_timing,
    )


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _write_csv(path: Path, theta: np.ndarray, x: np.ndarray, y: np.ndarray) -> None:
    lines = ["theta,x,y"]
    lines.extend(f"{t:.12g},{a:.12g},{b:.12g}" for t, a, b in zip(theta, x, y))
    path.write_text("\n".join(lines) + "\n")


def _write_svg(path: Path, curves, markers=None, size: int = 640) -> None:
    """Plot curves and point markers with the y axis pointing down, like the data."""
    stacks = [np.asarray(c) for _, c in curves]
    if markers is not None and len(markers):
        stacks.append(np.asarray(markers))
    allpts = np.vstack(stacks)
    x_lo, y_lo = allpts.min(axis=0)
    x_hi, y_hi = allpts.max(axis=0)
    y_lo = min(y_lo, 0.0)
    span = max(x_hi - x_lo, y_hi - y_lo, 1e-9)
    pad = 0.06 * span
    scale = (size - 2.0) / (span + 2.0 * pad)

    def to_px(pt):
        return (
            (pt[0] - x_lo + pad) * scale,
            (pt[1] - y_lo + pad) * scale,
        )

    height = int((y_hi - y_lo + 2.0 * pad) * scale) + 2
    width = int((x_hi - x_lo + 2.0 * pad) * scale) + 2
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    wl_y = to_px((0.0, 0.0))[1]
    parts.append(
        f'<line x1="0" y1="{wl_y:.2f}" x2="{width}" y2="{wl_y:.2f}" '
        'stroke="#9ab" stroke-width="1" stroke-dasharray="6 4"/>'
    )
    palette = {"mapped": "#d33", "lewis": "#2a7", "contour": "#d33"}
    for label, pts in curves:
        colour = palette.get(label, "#36c")
        coords = " ".join(f"{px:.2f},{py:.2f}" for px, py in (to_px(p) for p in np.asarray(pts)))
        dash = ' stroke-dasharray="5 4"' if label == "lewis" else ""
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{colour}" stroke-width="1.6"{dash}/>'
        )
    if markers is not None:
        for p in np.asarray(markers):
            px, py = to_px(p)
            parts.append(
                f'<circle cx="{px:.2f}" cy="{py:.2f}" r="2.4" fill="none" '
                'stroke="#222" stroke-width="1"/>'
            )
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n")


def _theta_domain(symmetric: bool) -> tuple[float, float]:
    return (0.0, pi / 2.0) if symmetric else (-pi / 2.0, pi / 2.0)


def _sample_contour(coeffs: MappingCoefficients, symmetric: bool, samples: int):
    lo, hi = _theta_domain(symmetric)
    theta = np.linspace(lo, hi, samples)
    x, y = evaluate_boundary(coeffs, theta)
    return theta, x, y


def _coefficients_payload(coeffs: MappingCoefficients, symmetric: bool) -> dict:
    breadth, draft = breadth_and_draft(coeffs)
    return {
        "N": coeffs.order,
        "F": float(coeffs.scale),
        "a": [float(v) for v in coeffs.a],
        "sigma_a": float(0.5 * breadth / coeffs.scale),
        "sigma_b": float(draft / coeffs.scale),
        "symmetric": symmetric,
    }


def _emit_fitted(spec: RunSpec, stem: str, report: dict, section: SectionOffsets, coeffs, lewis=None):
    written = []
    if "json" in spec.emit:
        p = spec.out_dir / f"{stem}_{spec.mode}.json"
        _write_json(p, report)
        written.append(p)
    theta, x, y = _sample_contour(coeffs, section.symmetric, spec.samples)
    if "csv" in spec.emit:
        p = spec.out_dir / f"{stem}_contour.csv"
        _write_csv(p, theta, x, y)
        written.append(p)
    if "svg" in spec.emit:
        curves = [("mapped", np.column_stack([x, y]))]
        if lewis is not None:
            lt, lx, ly = _sample_contour(lewis, section.symmetric, spec.samples)
            curves.append(("lewis", np.column_stack([lx, ly])))
        p = spec.out_dir / f"{stem}_plot.svg"
        _write_svg(p, curves, markers=section.points)
        written.append(p)
    return written


def _load_coefficients(path: Path) -> tuple[MappingCoefficients, bool]:
    data = json.loads(path.read_text())
    if "coefficients" in data:
        block = data["coefficients"]
        symmetric = bool(data.get("symmetric", True))
    else:
        block = data
        symmetric = bool(data.get("symmetric", True))
    coeffs = MappingCoefficients(float(block["F"]), np.asarray(block["a"], dtype=float))
    return coeffs, symmetric


def _run(spec: RunSpec) -> int:
    spec.out_dir.mkdir(parents=True, exist_ok=True)
    stem = spec.input_path.stem

    if spec.mode == "evaluate":
        try:
            coeffs, symmetric = _load_coefficients(spec.input_path)
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            print(f"parse: {exc}", file=sys.stderr)
            return 3
        theta, x, y = _sample_contour(coeffs, symmetric, spec.samples)
        if "json" in spec.emit:
            payload = _coefficients_payload(coeffs, symmetric)
            payload["samples"] = spec.samples
            payload["contour"] = [[float(t), float(a), float(b)] for t, a, b in zip(theta, x, y)]
            _write_json(spec.out_dir / f"{stem}_evaluate.json", payload)
        if "csv" in spec.emit:
            _write_csv(spec.out_dir / f"{stem}_contour.csv", theta, x, y)
        if "svg" in spec.emit:
            _write_svg(
                spec.out_dir / f"{stem}_plot.svg",
                [("contour", np.column_stack([x, y]))],
            )
        print(f"evaluated N={coeffs.order} at {spec.samples} angles")
        return 0

    try:
        section = load_offsets(spec.input_path)
    except OSError as exc:
        print(f"parse: {exc}", file=sys.stderr)
        return 3
    except (OffsetsParseError, SectionValidationError) as exc:
        print(f"parse: {exc}", file=sys.stderr)
        return 3

    scale = max(section.breadth, section.draft)
    lewis = lewis_initial_guess(section.breadth, section.draft, full_area(section))

    if spec.mode == "lewis":
        payload = _coefficients_payload(lewis.coefficients, section.symmetric)
        payload["area_matched"] = lewis.area_matched
        if "json" in spec.emit:
            _write_json(spec.out_dir / f"{stem}_lewis.json", payload)
        theta, x, y = _sample_contour(lewis.coefficients, section.symmetric, spec.samples)
        if "csv" in spec.emit:
            _write_csv(spec.out_dir / f"{stem}_contour.csv", theta, x, y)
        if "svg" in spec.emit:
            _write_svg(
                spec.out_dir / f"{stem}_plot.svg",
                [("lewis", np.column_stack([x, y]))],
                markers=section.points,
            )
        print(f"lewis seed F={lewis.coefficients.scale:.6g} area_matched={lewis.area_matched}")
        return 0

    if spec.mode == "fit":
        if spec.order is None:
            print("usage: fit needs --n", file=sys.stderr)
            return 2
        tolerance = spec.tolerance if spec.tolerance is not None else 1e-6 * scale * scale
        started = time.perf_counter()
        result = fit_section(section, FitConfig(spec.order, tolerance))
        elapsed = time.perf_counter() - started
        if result.diverged:
            print("fit: diverged (singular system or lost scale positivity)", file=sys.stderr)
            return 4
        ex, ey = nash_sutcliffe(section.points, result.mapped_points)
        accuracy = AccuracyReport(ex, ey, elapsed if spec.timing else 0.0)
        report = build_report(result, accuracy, stem, section.symmetric)
        report["converged"] = result.converged
        report["iterations"] = result.iterations
        _emit_fitted(
            spec, stem, report, section, result.coefficients,
            lewis.coefficients if section.symmetric else None,
        )
        state = "converged" if result.converged else "stopped"
        print(f"fit {state}: N={spec.order} E={result.error:.6g} after {result.iterations} sweeps")
        return 0

    # search
    started = time.perf_counter()
    try:
        outcome = search_optimum(section)
    except SearchFailedError as exc:
        print(f"search: {exc}", file=sys.stderr)
        return 5
    elapsed = time.perf_counter() - started
    best = outcome.best_fit
    ex, ey = nash_sutcliffe(section.points, best.mapped_points)
    accuracy = AccuracyReport(ex, ey, elapsed if spec.timing else 0.0)
    report = build_report(best, accuracy, stem, section.symmetric, search=outcome)
    if not spec.timing:
        for row in report["per_N"]:
            row["seconds"] = 0.0
    _emit_fitted(
        spec, stem, report, section, best.coefficients,
        lewis.coefficients if section.symmetric else None,
    )
    print(
        f"search optimum: N={outcome.best_order} E={outcome.best_error:.6g} "
        f"({len(outcome.per_order)} accepted orders)"
    )
    return 0


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = _spec_from_args(args)
    except ValueError as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return 2
    try:
        return _run(spec)
    except HullmapError as exc:
        stage = "fit" if spec.mode in ("fit", "lewis") else spec.mode
        print(f"{stage}: {exc}", file=sys.stderr)
        return 4 if stage == "fit" else 5 if stage == "search" else 1


if __name__ == "__main__":
    raise SystemExit(main())
