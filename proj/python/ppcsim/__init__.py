# SPDX-License-Identifier: Apache-2.0
"""Torus point sequences, pair-correlation statistics, discrepancy, and
step-law spectra, backed by the C++ core."""

from ._core import (
    StepDistribution,
    adjacent_pair_probability,
    batch_jittered,
    box_count,
    circular_gaps,
    discrepancy_bruteforce,
    extreme_discrepancy,
    fourier_coeff,
    frac,
    gap_histogram,
    golden_ratio_step,
    iid_uniform,
    jittered_single,
    kronecker,
    neighbor_count,
    nfold_cdf_deviation,
    pair_count_fast,
    pair_count_naive,
    preset_ids,
    r_statistic,
    random_walk,
    run_experiment,
    schatte_rate_fit,
    sequential_jittered,
    sup_fourier,
    theorem_preset,
    torus_dist,
    triangle_density,
)

__all__ = [
    "StepDistribution",
    "adjacent_pair_probability",
    "batch_jittered",
    "box_count",
    "circular_gaps",
    "discrepancy_bruteforce",
    "extreme_discrepancy",
    "fourier_coeff",
    "frac",
    "gap_histogram",
    "golden_ratio_step",
    "iid_uniform",
    "jittered_single",
    "kronecker",
    "neighbor_count",
    "nfold_cdf_deviation",
    "pair_count_fast",
    "pair_count_naive",
    "preset_ids",
    "r_statistic",
    "random_walk",
    "run_experiment",
    "schatte_rate_fit",
    "sequential_jittered",
    "sup_fourier",
    "theorem_preset",
    "torus_dist",
    "triangle_density",
]

__version__ = "0.1.0"
