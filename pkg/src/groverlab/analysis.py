"""Closed-form success probabilities and (phase, proportion) sweep tables."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .linalg import TAU
from .model import (
    AlgorithmKind,
    LiCMParams,
    LiDFParams,
    LiPCParams,
    LongParams,
    OriginalParams,
    PhaseParams,
    geometry_from_lambda,
)
from .operators import iteration_matrix
from .equivalence import transform_phases


def _check_proportion(name: str, value: float) -> None:
    if not 0.0 < value <= 1.0:
        raise ValueError(f"{name} must lie in (0, 1], got {value}")


def closed_form_probability(lambda_: float, k: int) -> float:
    """Success probability of k original iterations: sin^2((2k+1) * asin(sqrt(lambda)))."""
    _check_proportion("lambda_", lambda_)
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    return math.sin((2 * k + 1) * math.asin(math.sqrt(lambda_))) ** 2


def optimal_iterations(lambda_: float) -> int:
    """Iteration count floor(pi / (4 * sqrt(lambda))) for the original algorithm."""
    _check_proportion("lambda_", lambda_)
    return int(math.floor(math.pi / (4.0 * math.sqrt(lambda_))))


def single_iteration_amplitude_long(m: float, phi: float) -> complex:
    """Target amplitude after one long iteration from the uniform state.

    sqrt(m) * (1 - 2 e^{i phi} - (1 - e^{i phi})^2 * m), with m = sin^2(theta).
    """
    _check_proportion("m", m)
    e = cmath.exp(1j * phi)
    return math.sqrt(m) * (1.0 - 2.0 * e - (1.0 - e) ** 2 * m)


def single_iteration_probability(m: float) -> float:
    """One-iteration success probability at oracle phase pi/2: 4m^3 - 8m^2 + 5m."""
    _check_proportion("m", m)
    return 4.0 * m ** 3 - 8.0 * m ** 2 + 5.0 * m


# Roots of the cubic's derivative 12m^2 - 16m + 5.
_CUBIC_CRITICAL_POINTS = (0.5, 5.0 / 6.0)


def probability_floor(m_min: float) -> float:
    """Minimum of the one-iteration cubic over [m_min, 1], via its critical points."""
    _check_proportion("m_min", m_min)
    candidates = [m_min, 1.0]
    candidates.extend(c for c in _CUBIC_CRITICAL_POINTS if m_min <= c <= 1.0)
    return min(single_iteration_probability(c) for c in candidates)


@dataclass(frozen=True)
class SweepGrid:
    """Uniform (lambda, phase) grid swept at a fixed iteration count."""

    kind: AlgorithmKind
    k: int
    lambda_min: float = 0.01
    lambda_max: float = 1.0
    lambda_steps: int = 101
    phase_min: float = 0.0
    phase_max: float = TAU
    phase_steps: int = 101

    def __post_init__(self) -> None:
        _check_proportion("lambda_min", self.lambda_min)
        _check_proportion("lambda_max", self.lambda_max)
        if self.lambda_min > self.lambda_max:
            raise ValueError("lambda_min must not exceed lambda_max")
        if self.phase_min > self.phase_max:
            raise ValueError("phase_min must not exceed phase_max")
        if self.lambda_steps < 1 or self.phase_steps < 1:
            raise ValueError("step counts must be >= 1")
        if self.k < 0:
            raise ValueError(f"iteration count must be >= 0, got {self.k}")

    def lambdas(self) -> np.ndarray:
        return np.linspace(self.lambda_min, self.lambda_max, self.lambda_steps)

    def phases(self) -> np.ndarray:
        return np.linspace(self.phase_min, self.phase_max, self.phase_steps)


@dataclass(frozen=True)
class SweepResult:
    """Rows (lambda, phase, k, probability), lambda-major then phase."""

    grid: SweepGrid
    rows: tuple[tuple[float, float, int, float], ...]

    def probability_grid(self) -> np.ndarray:
        """Probabilities reshaped to (lambda_steps, phase_steps)."""
        p = np.array([row[3] for row in self.rows])
        return p.reshape(self.grid.lambda_steps, self.grid.phase_steps)


def phase_params_for(kind: AlgorithmKind, phase: float) -> PhaseParams:
    """Single-scalar-phase bundle used by sweeps (licm pins gamma2 = eta2 = 0)."""
    if kind is AlgorithmKind.ORIGINAL:
        return OriginalParams()
    if kind is AlgorithmKind.LONG:
        return LongParams(phase)
    if kind is AlgorithmKind.LI_DF:
        return LiDFParams(phase)
    if kind is AlgorithmKind.LI_CM:
        return LiCMParams(phase, 0.0, phase, 0.0)
    return LiPCParams(phase)


def sweep(grid: SweepGrid, matched_from_long: bool = False) -> SweepResult:
    """Tabulate the success probability over the grid.

    With matched_from_long the scalar phase axis is read as the long oracle
    phase and mapped to the grid's kind through the transform condition, so
    matched sweeps of different kinds tabulate the same field.  The original
    kind ignores the phase axis entirely.
    """
    phases = grid.phases()
    rows: list[tuple[float, float, int, float]] = []
    for lam in grid.lambdas():
        g = geometry_from_lambda(float(lam))
        mats = np.empty((grid.phase_steps, 2, 2), dtype=complex)
        for j, phase in enumerate(phases):
            if matched_from_long and grid.kind is not AlgorithmKind.ORIGINAL:
                params = transform_phases(LongParams(float(phase)), grid.kind)
            else:
                params = phase_params_for(grid.kind, float(phase))
            mats[j] = iteration_matrix(grid.kind, params, g).m
        v = np.broadcast_to(
            np.array([math.sin(g.theta), math.cos(g.theta)], dtype=complex),
            (grid.phase_steps, 2),
        ).copy()
        for _ in range(grid.k):
            v = np.einsum("pij,pj->pi", mats, v)
        probs = np.clip(np.abs(v[:, 0]) ** 2, 0.0, 1.0)
        rows.extend(
            (float(lam), float(phase), grid.k, float(p))
            for phase, p in zip(phases, probs)
        )
    return SweepResult(grid=grid, rows=tuple(rows))
