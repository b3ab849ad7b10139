"""Benchmark sweep comparing shuffle+adaptive, adaptive and non-adaptive sorting.

One :class:`ExperimentRecord` per (size, repetition).  Wall-clock columns are
reported as measured; comparison counts are the machine-independent columns.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields, replace
from typing import Optional, Sequence

from runshuffle.datagen import uniform_permutation
from runshuffle.disorder import step_down_runs, validate_keys
from runshuffle.rng import derive_seed
from runshuffle.shuffle import ShuffleConfig
from runshuffle.sorting import adaptive_merge_sort, baseline_merge_sort, shuffled_adaptive_sort

TIME_COLUMNS = (
    "shuffle_time",
    "adaptive_after_shuffle_time",
    "combined_time",
    "adaptive_without_shuffle_time",
    "non_adaptive_time",
    "pct_improvement_vs_adaptive",
    "pct_improvement_vs_nonadaptive",
)


class SortMismatchError(RuntimeError):
    pass


@dataclass
class ExperimentRecord:
    data_size: int
    disorder_before: int
    disorder_after: int
    shuffle_time: float
    adaptive_after_shuffle_time: float
    combined_time: float
    adaptive_without_shuffle_time: float
    non_adaptive_time: float
    pct_improvement_vs_adaptive: float
    pct_improvement_vs_nonadaptive: float
    comparisons_adaptive_after_shuffle: int
    comparisons_adaptive: int
    comparisons_baseline: int
    policy: str
    seed: int


COLUMNS = tuple(f.name for f in fields(ExperimentRecord))


@dataclass
class BenchConfig:
    sizes: list[int]
    repetitions: int = 5
    shuffle: ShuffleConfig = field(default_factory=ShuffleConfig)
    output: Optional[str] = None
    output_format: str = "csv"
    parallel: bool = False

    def __post_init__(self) -> None:
        if not self.sizes:
            raise ValueError("at least one size is required")
        if any(n < 0 for n in self.sizes):
            raise ValueError("sizes must be nonnegative")
        if self.repetitions < 1:
            raise ValueError("repetitions must be >= 1")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown format {self.output_format!r}")


def _pct(old: float, new: float) -> float:
    return 100.0 * (old - new) / old if old else 0.0


def run_one(keys: Sequence[int], config: ShuffleConfig) -> ExperimentRecord:
    """Time the three sorts on ``keys`` and check they agree."""
    keys = validate_keys(keys)
    before = step_down_runs(keys)
    shuffled_out, report, shuffled_stats = shuffled_adaptive_sort(keys, config)
    adaptive_out, adaptive_stats = adaptive_merge_sort(keys)
    baseline_out, baseline_stats = baseline_merge_sort(keys)
    if not (shuffled_out == adaptive_out == baseline_out):
        raise SortMismatchError(f"sort outputs disagree for n={len(keys)}, seed={config.seed}")

    shuffle_time = report.elapsed
    after_time = shuffled_stats.elapsed
    combined = shuffle_time + after_time
    return ExperimentRecord(
        data_size=len(keys),
        disorder_before=before,
        disorder_after=report.total_after,
        shuffle_time=shuffle_time,
        adaptive_after_shuffle_time=after_time,
        combined_time=combined,
        adaptive_without_shuffle_time=adaptive_stats.elapsed,
        non_adaptive_time=baseline_stats.elapsed,
        pct_improvement_vs_adaptive=_pct(adaptive_stats.elapsed, combined),
        pct_improvement_vs_nonadaptive=_pct(baseline_stats.elapsed, combined),
        comparisons_adaptive_after_shuffle=shuffled_stats.comparisons,
        comparisons_adaptive=adaptive_stats.comparisons,
        comparisons_baseline=baseline_stats.comparisons,
        policy=report.policy,
        seed=config.seed,
    )


def _task(args: tuple) -> tuple[int, int, ExperimentRecord]:
    size_index, rep, keys, n, rep_seed, shuffle = args
    if keys is None:
        keys = uniform_permutation(n, rep_seed)
    return size_index, rep, run_one(keys, replace(shuffle, seed=rep_seed))


def run_bench(config: BenchConfig, keys: Optional[Sequence[int]] = None) -> list[ExperimentRecord]:
    """Run the sweep.  With ``keys`` given, every repetition uses that input and ``sizes`` is ignored."""
    sizes = [len(keys)] if keys is not None else config.sizes
    tasks = []
    for size_index, n in enumerate(sizes):
        for rep in range(config.repetitions):
            rep_seed = derive_seed(config.shuffle.seed, size_index * config.repetitions + rep)
            tasks.append((size_index, rep, keys, n, rep_seed, config.shuffle))
    if config.parallel and len(tasks) > 1:
        with ProcessPoolExecutor() as pool:
            results = list(pool.map(_task, tasks))
    else:
        results = [_task(t) for t in tasks]
    results.sort(key=lambda r: (r[0], r[1]))
    return [r[2] for r in results]


def records_to_csv(records: Sequence[ExperimentRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for rec in records:
        # repr keeps floats round-trippable and locale independent
        writer.writerow([repr(v) if isinstance(v, float) else v for v in asdict(rec).values()])
    return buf.getvalue()


def records_to_json(records: Sequence[ExperimentRecord]) -> str:
    return json.dumps([asdict(r) for r in records], indent=2) + "\n"
