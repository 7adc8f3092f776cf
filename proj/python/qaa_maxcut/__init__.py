"""Quantum adiabatic Max-Cut simulation: brute-force oracle, Trotterized
adiabatic evolution, spectral flow, intersection index and noisy sampling."""

from ._core import (  # noqa: F401
    BudgetError,
    DegenerateGapError,
    Graph,
    InputError,
    MaxCutSolution,
    NumericalError,
    QaaError,
    SpectralFlow,
    brute_force_maxcut,
    build_mixer,
    build_problem_diagonal,
    compute_flow,
    count_branches_ending_at,
    cut_value,
    depth_sweep,
    eigenphases,
    exact_spectrum,
    exact_unitary,
    ground_manifold_overlap,
    ground_phase_at_end,
    interpolate,
    intersection_index,
    load_graph,
    noise_preset,
    noisy_qaa_histogram,
    parse_graph,
    qaa_evolve,
    sample_measurements,
    trotter_unitary,
)

__version__ = "0.1.0"
