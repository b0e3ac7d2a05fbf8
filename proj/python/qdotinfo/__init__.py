"""Coupled double-dot master-equation toolkit.

Steady states of the four-state bipartite jump process, the divergence of
the interacting steady state from its u = 0 reference, a seeded trajectory
sampler, and the built-in sweep families.
"""

from qdotinfo._core import (
    AbsorbingStateError,
    Binding,
    BindingFormula,
    DisconnectMode,
    FigureMember,
    FigurePreset,
    Generator,
    PhiResult,
    Reservoir,
    SolverError,
    StateDistribution,
    SweepError,
    SweepRecord,
    SweepSpec,
    SystemParams,
    TrajectoryStats,
    build_generator,
    csv_string,
    default_u_grid,
    detector_fill_fraction,
    disconnected_distribution,
    evolve,
    fermi,
    figure_preset,
    kl_divergence,
    parse_binding,
    phi_mi,
    resolve_disconnected,
    resolve_point,
    run_sweep,
    sample_steady,
    shannon_entropy,
    standard_mutual_information,
    steady_state,
    system_fill_fraction,
)

__all__ = [
    "AbsorbingStateError",
    "Binding",
    "BindingFormula",
    "DisconnectMode",
    "FigureMember",
    "FigurePreset",
    "Generator",
    "PhiResult",
    "Reservoir",
    "SolverError",
    "StateDistribution",
    "SweepError",
    "SweepRecord",
    "SweepSpec",
    "SystemParams",
    "TrajectoryStats",
    "build_generator",
    "csv_string",
    "default_u_grid",
    "detector_fill_fraction",
    "disconnected_distribution",
    "evolve",
    "fermi",
    "figure_preset",
    "kl_divergence",
    "parse_binding",
    "phi_mi",
    "resolve_disconnected",
    "resolve_point",
    "run_sweep",
    "sample_steady",
    "shannon_entropy",
    "standard_mutual_information",
    "steady_state",
    "system_fill_fraction",
]

__version__ = "0.1.0"
