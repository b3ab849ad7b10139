"""Random shuffling as a cheap preprocessing step for adaptive sorting.

Disorder is measured as the number of descents (Step-down Runs), parts of a
sequence whose disorder exceeds a threshold get a few random swaps, and then
a natural merge sort finishes the job.  The package also carries the exact
Eulerian-number analysis of the descent distribution and a benchmark harness.
"""

from runshuffle.combinatorics import (
    Improvement,
    binomial,
    claim1_threshold,
    claim2_at_least,
    descent_distribution,
    descent_permutation_count,
    eulerian_recurrence,
    eulerian_runs,
    improvement_condition,
    p_less,
)
from runshuffle.datagen import GenSpec, generate, nearly_sorted, uniform_permutation, with_target_disorder
from runshuffle.disorder import (
    DisorderReport,
    DuplicateKeyError,
    PartitionView,
    find_duplicates,
    part_disorders,
    partition_bounds,
    step_down_runs,
    swap_disorder_delta,
    validate_keys,
)
from runshuffle.rng import RngStream, derive_seed
from runshuffle.shuffle import PartShuffle, ShuffleConfig, ShuffleReport, draw_pair, preprocess, shuffle_part, swap_budget
from runshuffle.sorting import (
    SortStats,
    adaptive_merge_sort,
    baseline_merge_sort,
    run_decomposition,
    shuffled_adaptive_sort,
)

__version__ = "0.1.0"

__all__ = [
    "DisorderReport",
    "DuplicateKeyError",
    "GenSpec",
    "Improvement",
    "PartShuffle",
    "PartitionView",
    "RngStream",
    "ShuffleConfig",
    "ShuffleReport",
    "SortStats",
    "adaptive_merge_sort",
    "baseline_merge_sort",
    "binomial",
    "claim1_threshold",
    "claim2_at_least",
    "derive_seed",
    "descent_distribution",
    "descent_permutation_count",
    "draw_pair",
    "eulerian_recurrence",
    "eulerian_runs",
    "find_duplicates",
    "generate",
    "improvement_condition",
    "nearly_sorted",
    "p_less",
    "part_disorders",
    "partition_bounds",
    "preprocess",
    "run_decomposition",
    "shuffle_part",
    "shuffled_adaptive_sort",
    "step_down_runs",
    "swap_budget",
    "swap_disorder_delta",
    "uniform_permutation",
    "validate_keys",
    "with_target_disorder",
]
