"""Run a 2x2 Grover-type iteration on the subspace initial state."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import SubspaceGeometry
from .operators import IterationMatrix


@dataclass(frozen=True)
class SubspaceState:
    """Amplitude pair (a on |alpha>, b on |beta>); normalized states have |a|^2+|b|^2 = 1."""

    a: complex
    b: complex


def initial_state(g: SubspaceGeometry) -> SubspaceState:
    """The uniform superposition (sin(theta), cos(theta))."""
    return SubspaceState(complex(math.sin(g.theta)), complex(math.cos(g.theta)))


def run(it: IterationMatrix, k: int) -> SubspaceState:
    """State after k applications of the iteration; k = 0 returns the initial state."""
    if k < 0:
        raise ValueError(f"iteration count must be >= 0, got {k}")
    v = np.array(
        [math.sin(it.geometry.theta), math.cos(it.geometry.theta)], dtype=complex
    )
    for _ in range(k):
        v = it.m @ v
    return SubspaceState(complex(v[0]), complex(v[1]))


def success_probability(state: SubspaceState) -> float:
    """|a|^2, clamped into [0, 1] against roundoff."""
    return min(1.0, max(0.0, abs(state.a) ** 2))
