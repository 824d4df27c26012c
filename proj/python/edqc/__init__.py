"""Energy-diffusion quasi-clique discovery."""

from edqc._core import (
    CorrelationReport,
    DiffusionParams,
    EnergyMap,
    ExtractionResult,
    Graph,
    QuasiCliqueResult,
    RunSummary,
    SweepTable,
    active_set,
    build_graph,
    degree_order,
    diffusion_round,
    edqc,
    energy_density_correlation,
    energy_diffusion,
    extract_greedy_prefix,
    extract_quasi_clique,
    gen_er,
    gen_planted_clique,
    graph_from_spec,
    is_quasi_clique,
    load_graph,
    max_quasi_clique_bruteforce,
    parameter_sweep,
    pearson,
    run_many,
    run_variant,
    run_variant_many,
    sample_subset_stats,
    spectral_breakpoint,
    subset_density,
    subset_energy_density_samples,
    write_graph,
)

__version__ = "0.1.0"

__all__ = [
    "CorrelationReport",
    "DiffusionParams",
    "EnergyMap",
    "ExtractionResult",
    "Graph",
    "QuasiCliqueResult",
    "RunSummary",
    "SweepTable",
    "active_set",
    "build_graph",
    "degree_order",
    "diffusion_round",
    "edqc",
    "energy_density_correlation",
    "energy_diffusion",
    "extract_greedy_prefix",
    "extract_quasi_clique",
    "gen_er",
    "gen_planted_clique",
    "graph_from_spec",
    "is_quasi_clique",
    "load_graph",
    "max_quasi_clique_bruteforce",
    "parameter_sweep",
    "pearson",
    "run_many",
    "run_variant",
    "run_variant_many",
    "sample_subset_stats",
    "spectral_breakpoint",
    "subset_density",
    "subset_energy_density_samples",
    "write_graph",
]
