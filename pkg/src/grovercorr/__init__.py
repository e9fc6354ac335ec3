"""Entanglement and correlation measures across Grover search iterations.

Closed-form reduced density matrices and measure series for arbitrary
register sizes, cross-validated by a brute-force statevector simulator.
"""

from .core import (
    Angles,
    CapacityError,
    GroverConfig,
    IterationPoint,
    angles,
    closest_integer,
    iteration_point,
    optimal_iterations,
    peak_iterations,
    rotation_angle,
)
from .correlations import (
    ONE_REST,
    PAIR,
    CorrelationRecord,
    MeasurementBasis,
    bipartite_concurrence_pure,
    classical_correlation,
    conditional_ensemble,
    correlation_record,
    entanglement_of_formation,
    mutual_information,
    pair_state,
    pairwise_concurrence_closed,
    quantum_discord,
    trace_out,
    von_neumann_entropy,
    wootters_concurrence,
)
from .numerics import EighResult, binary_entropy, eigh_small, shannon_entropy
from .oracle import (
    brute_force_record,
    evolve,
    grover_step,
    init_uniform,
    partial_trace,
)
from .states import (
    ReducedClosedForm,
    check_density_matrix,
    full_density_matrix,
    materialize,
    rank2_eigenvalues,
    rank2_spectrum,
    reduced_closed_form,
    relabel_to_zero,
)

__version__ = "0.1.0"

__all__ = [
    "Angles",
    "CapacityError",
    "CorrelationRecord",
    "EighResult",
    "GroverConfig",
    "IterationPoint",
    "MeasurementBasis",
    "ONE_REST",
    "PAIR",
    "ReducedClosedForm",
    "angles",
    "binary_entropy",
    "bipartite_concurrence_pure",
    "brute_force_record",
    "check_density_matrix",
    "classical_correlation",
    "closest_integer",
    "conditional_ensemble",
    "correlation_record",
    "eigh_small",
    "entanglement_of_formation",
    "evolve",
    "full_density_matrix",
    "grover_step",
    "init_uniform",
    "iteration_point",
    "materialize",
    "mutual_information",
    "optimal_iterations",
    "pair_state",
    "pairwise_concurrence_closed",
    "partial_trace",
    "peak_iterations",
    "quantum_discord",
    "rank2_eigenvalues",
    "rank2_spectrum",
    "reduced_closed_form",
    "relabel_to_zero",
    "rotation_angle",
    "shannon_entropy",
    "trace_out",
    "von_neumann_entropy",
    "wootters_concurrence",
]
