"""Oracle, diffusion, and one-iteration operators restricted to the search subspace.

Every algorithm's oracle is diagonal in the (|alpha>, |beta>) basis and every
diffusion has the rank-one form c*|s><s| + d*I, so the N-dimensional operators
restrict cleanly to 2x2 matrices acting on span{|alpha>, |beta>}.  One
iteration is diffusion applied after the oracle.

Oracle eigenvalues (target, non-target) and diffusion coefficients (c, d):

  original  (-1, 1)                          (2, -1)
  long      (e^{i phi}, 1)                   (1 - e^{i vphi}, -1)
  lidf      (1 - 2 cos(tau) e^{i tau}, 1)    (2 cos(tau) e^{i tau}, -1)
  licm      (-e^{i eta1}, -e^{i eta2})       (e^{i gamma1} - e^{i gamma2}, e^{i gamma2})
  lipc      (e^{-i beta}, 1)                 (1 - e^{i beta}, e^{i beta})

Phases are accepted on all of R; nothing is normalized mod 2*pi here.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .linalg import IDENTITY2, is_unitary, mat2
from .model import (
    AlgorithmKind,
    PhaseParams,
    SubspaceGeometry,
    check_params_tag,
)

UNITARITY_TOL = 1e-10


def uniform_projector(g: SubspaceGeometry) -> np.ndarray:
    """|s><s| restricted to the subspace."""
    s, c = math.sin(g.theta), math.cos(g.theta)
    return mat2(s * s, s * c, s * c, c * c)


def subspace_oracle(kind: AlgorithmKind, params: PhaseParams) -> np.ndarray:
    """2x2 oracle: diag(target eigenvalue, non-target eigenvalue)."""
    check_params_tag(kind, params)
    if kind is AlgorithmKind.ORIGINAL:
        target, rest = -1.0 + 0j, 1.0 + 0j
    elif kind is AlgorithmKind.LONG:
        target, rest = cmath.exp(1j * params.oracle_phase), 1.0 + 0j
    elif kind is AlgorithmKind.LI_DF:
        target = 1.0 - 2.0 * math.cos(params.tau) * cmath.exp(1j * params.tau)
        rest = 1.0 + 0j
    elif kind is AlgorithmKind.LI_CM:
        target, rest = -cmath.exp(1j * params.eta1), -cmath.exp(1j * params.eta2)
    else:
        target, rest = cmath.exp(-1j * params.beta), 1.0 + 0j
    return mat2(target, 0.0, 0.0, rest)


def subspace_diffusion(
    kind: AlgorithmKind, params: PhaseParams, g: SubspaceGeometry
) -> np.ndarray:
    """2x2 diffusion: c * |s><s| + d * I with per-kind coefficients."""
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
    return c * uniform_projector(g) + d * IDENTITY2


@dataclass(frozen=True, eq=False)
class IterationMatrix:
    """One Grover-type iteration in the (|alpha>, |beta>) basis."""

    m: np.ndarray
    kind: AlgorithmKind
    params: PhaseParams
    geometry: SubspaceGeometry


def iteration_matrix(
    kind: AlgorithmKind, params: PhaseParams, g: SubspaceGeometry
) -> IterationMatrix:
    """Composed iteration: diffusion @ oracle, checked unitary."""
    m = subspace_diffusion(kind, params, g) @ subspace_oracle(kind, params)
    if not is_unitary(m, UNITARITY_TOL):
        raise ValueError(
            f"{kind.value} iteration matrix failed the unitarity check at {UNITARITY_TOL}"
        )
    return IterationMatrix(m=m, kind=kind, params=params, geometry=g)


def long_iteration_closed_form(
    g: SubspaceGeometry, phi: float, diffusion_phi: float | None = None
) -> np.ndarray:
    """Entrywise closed form of the two-phase long iteration.

    phi drives the oracle, diffusion_phi the diffusion (defaulting to phi,
    the phase-matched case).
    """
    vphi = phi if diffusion_phi is None else diffusion_phi
    s, c = math.sin(g.theta), math.cos(g.theta)
    eo = cmath.exp(1j * phi)
    ed = cmath.exp(1j * vphi)
    return mat2(
        -eo * (s * s * ed + c * c),
        s * c * (1.0 - ed),
        s * c * eo * (1.0 - ed),
        -(c * c * ed + s * s),
    )
