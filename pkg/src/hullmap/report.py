"""Accuracy metrics and the JSON-ready run report."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .fit import FitResult
from .search import SearchReport


def nash_sutcliffe(real_points, mapped_points) -> tuple[float | None, float | None]:
    """Per-axis Nash-Sutcliffe efficiency of mapped points against real points.

    1 is a perfect match; an axis whose real coordinates have zero variance
    has no defined efficiency and comes back as None.
    """
    real = np.asarray(real_points, dtype=float)
    mapped = np.asarray(mapped_points, dtype=float)
    if real.shape != mapped.shape or real.ndim != 2 or real.shape[1] != 2:
        raise DimensionMismatchError("real and mapped points must share an (n, 2) shape")

    out: list[float | None] = []
    for axis in range(2):
        r = real[:, axis]
        m = mapped[:, axis]
        denom = float(np.sum((r - r.mean()) ** 2))
        if denom == 0.0:
            out.append(None)
            continue
        out.append(1.0 - float(np.sum((r - m) ** 2)) / denom)
    return out[0], out[1]


@dataclass(frozen=True)
class AccuracyReport:
    ex: float | None
    ey: float | None
    wall_time_seconds: float


def build_report(
    fit: FitResult,
    accuracy: AccuracyReport,
    section_id: str,
    symmetric: bool,
    search: SearchReport | None = None,
) -> dict:
    """Assemble the run report as plain Python types ready for JSON."""
    if search is not None:
        best_order = search.best_order
        best_error = search.best_error
    else:
        best_order = fit.coefficients.order
        best_error = fit.error
    report = {
        "section_id": section_id,
        "symmetric": symmetric,
        "N_best": int(best_order),
        "E_best": float(best_error),
        "log10_E_min": math.log10(best_error) if best_error > 0.0 else None,
        "wall_time_seconds": float(accuracy.wall_time_seconds),
        "nash_sutcliffe": {"ex": accuracy.ex, "ey": accuracy.ey},
        "coefficients": {
            "F": float(fit.coefficients.scale),
            "a": [float(v) for v in fit.coefficients.a],
        },
        "thetas": [float(t) for t in fit.thetas.theta],
        "mapped_contour": [[float(x), float(y)] for x, y in fit.mapped_points],
        "unresolved_theta_indices": sorted(int(i) for i in fit.thetas.unresolved),
    }
    if search is not None:
        report["per_N"] = [
            {
                "N": rec.order,
                "E_min": rec.e_min,
                "iterations": rec.iterations,
                "seconds": rec.seconds,
            }
            for rec in search.per_order
        ]
    return report
