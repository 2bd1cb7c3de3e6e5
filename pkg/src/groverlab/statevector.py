"""Brute-force N-dimensional engine used to cross-validate the subspace engine.

The oracle multiplies target amplitudes by the kind's eigenvalue; the
diffusion maps v to c * <s|v> * |s> + d * v.  Both are rank-one updates,
O(N) per application, and are written out here from the operator
definitions on purpose: this module must stay an independent route from
the 2x2 construction in operators.py, so no coefficient tables are shared.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .model import AlgorithmKind, PhaseParams, SearchSpace, check_params_tag
from .subspace import SubspaceState


@dataclass(frozen=True, eq=False)
class StateVector:
    """Length-N amplitude vector over the computational basis."""

    amplitudes: np.ndarray
    space: SearchSpace


def _target_indices(space: SearchSpace) -> np.ndarray:
    return np.fromiter(space.targets, dtype=np.intp, count=space.num_targets)


def uniform_state(space: SearchSpace) -> StateVector:
    """Equal superposition: every amplitude 1/sqrt(N)."""
    size = space.size
    return StateVector(np.full(size, 1.0 / math.sqrt(size), dtype=complex), space)


def apply_oracle(v: StateVector, kind: AlgorithmKind, params: PhaseParams) -> StateVector:
    """Multiply marked amplitudes by the kind's target eigenvalue.

    Only licm also rescales the unmarked amplitudes (by -e^{i eta2}).
    """
    check_params_tag(kind, params)
    amps = v.amplitudes.copy()
    targets = _target_indices(v.space)
    if kind is AlgorithmKind.ORIGINAL:
        amps[targets] *= -1.0
    elif kind is AlgorithmKind.LONG:
        amps[targets] *= cmath.exp(1j * params.oracle_phase)
    elif kind is AlgorithmKind.LI_DF:
        amps[targets] *= 1.0 - 2.0 * math.cos(params.tau) * cmath.exp(1j * params.tau)
    elif kind is AlgorithmKind.LI_CM:
        marked = np.zeros(v.space.size, dtype=bool)
        marked[targets] = True
        amps[marked] *= -cmath.exp(1j * params.eta1)
        amps[~marked] *= -cmath.exp(1j * params.eta2)
    else:
        amps[targets] *= cmath.exp(-1j * params.beta)
    return StateVector(amps, v.space)


def apply_diffusion(v: StateVector, kind: AlgorithmKind, params: PhaseParams) -> StateVector:
    """v -> c * <s|v> * |s> + d * v with per-kind coefficients (c, d)."""
    check_params_tag(kind, params)
    if kind is AlgorithmKind.ORIGINAL:
        c, d = 2.0 + 0j, -1.0 + 0j
    elif kind is AlgorithmKind.LONG:
        c, d = 1.0 - cmath.exp(1j * params.diffusion_phase), -1.0 + 0j
    elif kind is AlgorithmKind.LI_DF:
        c = 2.0 * math.cos(params.tau) * cmath.exp(1j * params.tau)
        d = -1.0 + 0j
    elif kind is AlgorithmKind.LI_CM:
        c = cmath.exp(1j * params.gamma1) - cmath.exp(1j * params.gamma2)
        d = cmath.exp(1j * params.gamma2)
    else:
        c = 1.0 - cmath.exp(1j * params.beta)
        d = cmath.exp(1j * params.beta)
    # c * <s|v> * |s> has the constant value c * sum(v) / N on every index.
    uniform_part = c * v.amplitudes.sum() / v.space.size
    return StateVector(d * v.amplitudes + uniform_part, v.space)


def run_full(
    space: SearchSpace, kind: AlgorithmKind, params: PhaseParams, k: int
) -> StateVector:
    """k alternations of oracle then diffusion, starting from the uniform state."""
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    v = uniform_state(space)
    for _ in range(k):
        v = apply_diffusion(apply_oracle(v, kind, params), kind, params)
    return v


def target_probability(v: StateVector) -> float:
    """Summed |amplitude|^2 over the target indices, clamped into [0, 1]."""
    targets = _target_indices(v.space)
    p = float(np.sum(np.abs(v.amplitudes[targets]) ** 2))
    return min(1.0, max(0.0, p))


def project_to_subspace(v: StateVector) -> tuple[SubspaceState, float]:
    """Amplitude pair (<alpha|v>, <beta|v>) and the norm of what lies outside the span.

    With M = N there are no non-target indices; the |beta> component is 0.
    """
    size, num_targets = v.space.size, v.space.num_targets
    marked = np.zeros(size, dtype=bool)
    marked[_target_indices(v.space)] = True
    a = complex(v.amplitudes[marked].sum() / math.sqrt(num_targets))
    residual_vec = v.amplitudes.copy()
    residual_vec[marked] -= a / math.sqrt(num_targets)
    if num_targets < size:
        b = complex(v.amplitudes[~marked].sum() / math.sqrt(size - num_targets))
        residual_vec[~marked] -= b / math.sqrt(size - num_targets)
    else:
        b = 0j
    return SubspaceState(a, b), float(np.linalg.norm(residual_vec))
