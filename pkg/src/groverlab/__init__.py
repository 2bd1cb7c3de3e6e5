"""Numerical laboratory for the original Grover iteration and four phase-generalized variants.

The package constructs each variant's one-iteration operator in the 2D
subspace spanned by the target/non-target superpositions, runs it there and
on full statevectors, verifies that matched phases make the variants
coincide up to a computable global phase, and tabulates probability sweeps
as CSV data.
"""
from .analysis import (
    SweepGrid,
    SweepResult,
    closed_form_probability,
    optimal_iterations,
    phase_params_for,
    probability_floor,
    single_iteration_amplitude_long,
    single_iteration_probability,
    sweep,
)
from .equivalence import (
    EquivalenceReport,
    TRANSFORMABLE_KINDS,
    predicted_global_phase,
    transform_phases,
    verify_phase_equivalence,
)
from .linalg import (
    angle_distance,
    global_phase_align,
    is_unitary,
    mat2,
    mat2_apply,
    mat2_mul,
    max_entry_deviation,
    wrap_angle,
)
from .model import (
    AlgorithmKind,
    LiCMParams,
    LiDFParams,
    LiPCParams,
    LongParams,
    OriginalParams,
    PhaseParams,
    SearchSpace,
    SubspaceGeometry,
    geometry_from_lambda,
    geometry_of,
    make_search_space,
)
from .operators import (
    IterationMatrix,
    iteration_matrix,
    long_iteration_closed_form,
    subspace_diffusion,
    subspace_oracle,
    uniform_projector,
)
from .statevector import (
    StateVector,
    apply_diffusion,
    apply_oracle,
    project_to_subspace,
    run_full,
    target_probability,
    uniform_state,
)
from .subspace import SubspaceState, initial_state, run, success_probability

__version__ = "0.1.0"

__all__ = [
    "AlgorithmKind",
    "EquivalenceReport",
    "IterationMatrix",
    "LiCMParams",
    "LiDFParams",
    "LiPCParams",
    "LongParams",
    "OriginalParams",
    "PhaseParams",
    "SearchSpace",
    "StateVector",
    "SubspaceGeometry",
    "SubspaceState",
    "SweepGrid",
    "SweepResult",
    "TRANSFORMABLE_KINDS",
    "angle_distance",
    "apply_diffusion",
    "apply_oracle",
    "closed_form_probability",
    "geometry_from_lambda",
    "geometry_of",
    "global_phase_align",
    "initial_state",
    "is_unitary",
    "iteration_matrix",
    "long_iteration_closed_form",
    "make_search_space",
    "mat2",
    "mat2_apply",
    "mat2_mul",
    "max_entry_deviation",
    "optimal_iterations",
    "phase_params_for",
    "predicted_global_phase",
    "probability_floor",
    "project_to_subspace",
    "run",
    "run_full",
    "single_iteration_amplitude_long",
    "single_iteration_probability",
    "subspace_diffusion",
    "subspace_oracle",
    "success_probability",
    "sweep",
    "target_probability",
    "transform_phases",
    "uniform_projector",
    "uniform_state",
    "verify_phase_equivalence",
    "wrap_angle",
]
