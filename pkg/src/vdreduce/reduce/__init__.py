"""Graph systems, simplification, borders and constants, and the new labeling."""

from .borders import (
    BorderClass,
    ReductionContext,
    borders_at,
    compute_borders,
    compute_constants,
    find_E,
    find_qQ,
    gap_conditions_hold,
    split_context,
)
from .graph import Edge, GraphSystem, LiftRecipe, auto_phi, default_factorization, simplify
from .pipeline import PipelineResult, pipeline, prepare, verification
from .tau import (
    TauDecomposition,
    build_eta_prime,
    tau_edge_infinite,
    tau_vertex,
    validate_eta_k,
)

__all__ = [
    "BorderClass", "Edge", "GraphSystem", "LiftRecipe", "PipelineResult",
    "ReductionContext", "TauDecomposition", "auto_phi", "borders_at",
    "build_eta_prime", "compute_borders", "compute_constants",
    "default_factorization", "find_E", "find_qQ", "gap_conditions_hold",
    "pipeline", "prepare", "simplify", "split_context", "tau_edge_infinite",
    "tau_vertex", "validate_eta_k", "verification",
]
