# Copyright 2026 The tomoent Authors
# SPDX-License-Identifier: Apache-2.0
"""Tomographic entanglement indicators for two-mode bosonic systems."""

from tomoent._core import (
    AtomFieldParams,
    BECParams,
    BipartiteState,
    ConfigError,
    ConvergenceError,
    DegenerateSeriesError,
    Error,
    Hamiltonian,
    InvalidArgument,
    NormalizationError,
    QuadratureGrid,
    analyze,
    bec_analytic_state,
    binomial_state,
    build_hamiltonian_af,
    build_hamiltonian_bec,
    coherent_state,
    estimate_delay,
    evolve,
    fit_lambda_inf,
    fnn_embedding_dim,
    indicators,
    load_config,
    local_lyapunov,
    mutual_information,
    overlap,
    pacs_state,
    power_spectrum,
    reduced_density_matrix,
    run_indicators,
    sle,
    svne,
    tomogram,
    two_mode_squeezed,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
