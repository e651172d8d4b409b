# Copyright (c) 2026 quditlab contributors
# SPDX-License-Identifier: Apache-2.0
"""State estimation from parallel or conjugate qudit pairs.

Numeric heavy lifting lives in the compiled `_core` module; this wrapper
hydrates its JSON payloads into dicts and re-exports the array functions.
"""

import json as _json

from . import _core as _c
from ._core import (
    bose_dim,
    build_seed,
    conjugation_fidelity,
    estimation_bound,
    haar_unitary,
    hermitian_eigs,
    mean_fidelity,
    mean_fidelity_mc,
    mean_fidelity_params,
    moment_operator,
    optimal_conjugator,
    positivity_margin,
    random_channel,
    reference_operator,
    reference_operator_names,
    sym_projector,
    version,
)

__version__ = version()

__all__ = [
    "bose_dim",
    "build_seed",
    "closed_forms",
    "completeness_residual",
    "conjugation_fidelity",
    "estimation_bound",
    "haar_unitary",
    "hermitian_eigs",
    "mean_fidelity",
    "mean_fidelity_mc",
    "mean_fidelity_params",
    "moment_operator",
    "optimal_conjugator",
    "optimize",
    "positivity_margin",
    "random_channel",
    "reference_operator",
    "reference_operator_names",
    "simulate",
    "sym_projector",
    "table1",
    "version",
]


def closed_forms(d):
    """Benchmark fidelities f_parallel, f_local, f_perp for dimension d."""
    return _json.loads(_c.closed_forms_json(d))


def completeness_residual(x, d, trials=100, seed=0x5EEDC0DE):
    """Trace, swap, and sampled-twirl residuals of a candidate seed."""
    return _json.loads(_c.completeness_residual_json(x, d, trials, seed))


def optimize(d, case, restarts=20, seed=0x5EEDC0DE, threads=1):
    """Maximize the mean fidelity over the four-parameter seed family."""
    return _json.loads(_c.optimize_json(d, case, restarts, seed, threads))


def simulate(d, case, seed_op="case_one_opt", samples=10000,
             seed=0x5EEDC0DE, threads=1):
    """Rejection-sample POVM outcomes and report the empirical fidelity."""
    return _json.loads(_c.simulate_json(d, case, seed_op, samples, seed, threads))


def table1(d_list=(2, 3, 4, 5, 6, 11, 17), samples=100000, mc_max_d=4,
           seed=0x5EEDC0DE, threads=1):
    """Closed-form benchmark table, with Monte Carlo columns for small d."""
    return _json.loads(_c.table1_json(list(d_list), samples, mc_max_d, seed, threads))
