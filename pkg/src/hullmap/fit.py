"""Alternating fit of angles and coefficients for one section.

One sweep assigns an angle to every point from the current coefficients, then
solves the linear system for fresh coefficients at those angles.  The fit
error is the summed squared distance between input points and their mapped
partners.  Sweeps repeat from a Lewis-form seed until the error drops under
the configured tolerance, the sweep budget runs out, or the error has risen
for `DIVERGENCE_RUN` sweeps in a row.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigurationError, DimensionMismatchError, SingularSystemError
from .linsys import assemble_general, assemble_symmetric, lu_solve
from .mapping import (
    MappingCoefficients,
    ScaledCoefficients,
    average_coefficients,
    boundary_from_scaled,
    lewis_initial_guess,
)
from .section import SectionOffsets, full_area, split_areas
from .theta import ThetaAssignment, assign_thetas

DEFAULT_SWEEPS_SYMMETRIC = 200
DEFAULT_SWEEPS_ASYMMETRIC = 300
DIVERGENCE_RUN = 10


@dataclass(frozen=True)
class FitConfig:
    """Coefficient order N, error tolerance, and an optional sweep budget."""

    order: int
    tolerance: float
    max_iterations: int | None = None


@dataclass
class FitResult:
    coefficients: MappingCoefficients
    thetas: ThetaAssignment
    error: float
    error_history: list[float]
    fa_history: list[np.ndarray]
    iterations: int
    converged: bool
    diverged: bool
    mapped_points: np.ndarray
    theta_history: list[ThetaAssignment] | None = field(default=None, repr=False)


def compute_error(section: SectionOffsets, mapped_points: np.ndarray) -> float:
    """Summed squared distance between section points and mapped points."""
    mapped = np.asarray(mapped_points, dtype=float)
    if mapped.shape != section.points.shape:
        raise DimensionMismatchError(
            f"mapped shape {mapped.shape} does not match section shape {section.points.shape}"
        )
    diff = section.points - mapped
    return float(np.sum(diff * diff))


def _mapped(fa: np.ndarray, thetas: ThetaAssignment) -> np.ndarray:
    x, y = boundary_from_scaled(fa, thetas.theta)
    return np.column_stack([x, y])


def _pad_to_order(fa: np.ndarray, order: int) -> np.ndarray:
    out = np.zeros(order + 1)
    take = min(len(fa), order + 1)
    out[:take] = fa[:take]
    return out


def _seed_symmetric(section: SectionOffsets, order: int) -> np.ndarray:
    guess = lewis_initial_guess(section.breadth, section.draft, full_area(section))
    fa = guess.coefficients.scale * guess.coefficients.a
    return _pad_to_order(fa, order)


def _seed_asymmetric(section: SectionOffsets, order: int) -> np.ndarray:
    # Each half is treated as its own symmetric section mirrored about the
    # vertical through the deepest point, then the two seeds are averaged.
    area_left, area_right = split_areas(section)
    left = lewis_initial_guess(2.0 * section.half_breadth_left, section.draft, 2.0 * area_left)
    right = lewis_initial_guess(2.0 * section.half_breadth_right, section.draft, 2.0 * area_right)
    fa_left = _pad_to_order(left.coefficients.scale * left.coefficients.a, order)
    fa_right = _pad_to_order(right.coefficients.scale * right.coefficients.a, order)
    return average_coefficients(
        ScaledCoefficients(fa_left), ScaledCoefficients(fa_right)
    ).values.copy()


def _result_from_state(
    fa: np.ndarray,
    thetas: ThetaAssignment,
    error: float,
    history: list[float],
    fa_history: list[np.ndarray],
    iterations: int,
    converged: bool,
    diverged: bool,
    theta_history: list[ThetaAssignment] | None,
) -> FitResult:
    return FitResult(
        coefficients=ScaledCoefficients(fa).to_mapping(),
        thetas=thetas,
        error=error,
        error_history=history,
        fa_history=fa_history,
        iterations=iterations,
        converged=converged,
        diverged=diverged,
        mapped_points=_mapped(fa, thetas),
        theta_history=theta_history,
    )


def _run_fit(
    section: SectionOffsets,
    config: FitConfig,
    seed: np.ndarray,
    assemble,
    default_sweeps: int,
    record_thetas: bool,
) -> FitResult:
    budget = config.max_iterations if config.max_iterations is not None else default_sweeps
    if budget < 1:
        raise ConfigurationError("max_iterations must be at least 1")
    fa = seed
    prev: ThetaAssignment | None = None
    history: list[float] = []
    fa_history: list[np.ndarray] = []
    theta_history: list[ThetaAssignment] | None = [] if record_thetas else None
    best: tuple[float, np.ndarray, ThetaAssignment] | None = None
    rising = 0
    iterations = 0
    converged = False
    diverged = False

    for _ in range(budget):
        thetas = assign_thetas(ScaledCoefficients(fa), section, prev)
        try:
            solved = lu_solve(assemble(thetas, section, config.order)).values
        except SingularSystemError:
            diverged = True
            if best is None:
                # Nothing usable solved yet: report the seed state at these angles.
                error = compute_error(section, _mapped(fa, thetas))
                history.append(error)
                fa_history.append(fa.copy())
                if theta_history is not None:
                    theta_history.append(thetas)
                best = (error, fa.copy(), thetas)
                iterations += 1
            break
        iterations += 1
        error = compute_error(section, _mapped(solved, thetas))
        history.append(error)
        fa_history.append(solved.copy())
        if theta_history is not None:
            theta_history.append(thetas)
        # A sweep with a nonpositive leading coefficient flips the contour's
        # orientation; it may still recover, but it cannot be reported.
        if solved[0] > 0.0 and (best is None or error < best[0]):
            best = (error, solved.copy(), thetas)
        if solved[0] > 0.0 and error < config.tolerance:
            converged = True
            fa, prev = solved, thetas
            break
        rising = rising + 1 if (len(history) >= 2 and error > history[-2]) else 0
        if rising >= DIVERGENCE_RUN:
            break
        if best is not None and best[0] == 0.0:
            break
        fa, prev = solved, thetas

    if converged:
        return _result_from_state(
            fa, prev, history[-1], history, fa_history, iterations, True, False, theta_history
        )
    if best is None:
        # No sweep kept a positive leading coefficient; report the seed state.
        diverged = True
        thetas = assign_thetas(ScaledCoefficients(seed), section, None)
        best = (compute_error(section, _mapped(seed, thetas)), seed.copy(), thetas)
    error, fa_best, thetas_best = best
    return _result_from_state(
        fa_best, thetas_best, error, history, fa_history, iterations, False, diverged, theta_history
    )


def fit_symmetric(section: SectionOffsets, config: FitConfig, record_thetas: bool = False) -> FitResult:
    """Fit a symmetric half-section; breadth and draft are held exactly."""
    if not section.symmetric:
        raise ConfigurationError("fit_symmetric needs a symmetric section")
    if config.order < 2:
        raise ConfigurationError("symmetric fits need order >= 2")
    seed = _seed_symmetric(section, config.order)
    return _run_fit(
        section, config, seed, assemble_symmetric, DEFAULT_SWEEPS_SYMMETRIC, record_thetas
    )


def fit_nonsymmetric(section: SectionOffsets, config: FitConfig, record_thetas: bool = False) -> FitResult:
    """Fit a full section with free waterline endpoints and no exact constraints."""
    if section.symmetric:
        raise ConfigurationError("fit_nonsymmetric needs a non-symmetric section")
    if config.order < 1:
        raise ConfigurationError("fits need order >= 1")
    seed = _seed_asymmetric(section, config.order)
    return _run_fit(
        section, config, seed, assemble_general, DEFAULT_SWEEPS_ASYMMETRIC, record_thetas
    )


def fit_section(section: SectionOffsets, config: FitConfig, record_thetas: bool = False) -> FitResult:
    """Dispatch on the section's symmetry flag."""
    if section.symmetric:
        return fit_symmetric(section, config, record_thetas)
    return fit_nonsymmetric(section, config, record_thetas)
