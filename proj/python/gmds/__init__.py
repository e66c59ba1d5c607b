"""Generalized minimum dominating sets: BP, decimation, ensembles, summarization."""

from ._gmds import (
    BpdResult,
    DominatingSet,
    InputError,
    InsufficientDataError,
    RefusalError,
    Summary,
    ThermoDensities,
    WeightedGraph,
    affinity_propagation,
    bpd_solve,
    coverage_ratios,
    ensemble_scan,
    estimate_rho0,
    exact_mds,
    exact_thermo,
    generate_er,
    is_satisfying,
    load_graph,
    pagerank,
    rho0_curve,
    rouge1,
    run_bp,
    save_graph,
    scan_beta,
    segment_text,
    summarize,
    threshold_exceed_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
