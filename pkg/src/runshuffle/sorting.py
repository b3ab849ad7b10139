"""Natural merge sort, a plain top-down merge sort, and the shuffle-then-sort pipeline.

Comparisons are counted at the single place each algorithm compares keys:
the run scan (one ``<`` per adjacency) and :func:`_merge`.  Only ``<`` is
ever applied to keys.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Sequence

from runshuffle.disorder import DuplicateKeyError, find_duplicates
from runshuffle.shuffle import ShuffleConfig, ShuffleReport, preprocess

__all__ = [
    "SortStats",
    "adaptive_merge_sort",
    "baseline_merge_sort",
    "run_decomposition",
    "shuffled_adaptive_sort",
]


@dataclass
class SortStats:
    comparisons: int = 0
    moves: int = 0
    runs_detected: int = 0
    elapsed: float = 0.0


def run_decomposition(keys: Sequence) -> list[tuple[int, int]]:
    """Maximal strictly ascending runs as half-open ``(start, end)`` pairs."""
    n = len(keys)
    if n == 0:
        return []
    runs = []
    start = 0
    for i in range(1, n):
        if not keys[i - 1] < keys[i]:
            runs.append((start, i))
            start = i
    runs.append((start, n))
    return runs


def _merge(src: list, dst: list, lo: int, mid: int, hi: int) -> int:
    """Merge ``src[lo:mid]`` and ``src[mid:hi]`` into ``dst[lo:hi]``; return comparisons."""
    i, j, k = lo, mid, lo
    count = 0
    while i < mid and j < hi:
        count += 1
        b = src[j]
        a = src[i]
        if b < a:
            dst[k] = b
            j += 1
        else:
            dst[k] = a
            i += 1
        k += 1
    if i < mid:
        dst[k:hi] = src[i:mid]
    else:
        dst[k:hi] = src[j:hi]
    return count


def adaptive_merge_sort(keys: Sequence) -> tuple[list, SortStats]:
    """Sort by detecting ascending runs and merging neighbouring runs in rounds.

    Uses at most ``(n - 1) * (1 + ceil(log2(runs)))`` comparisons.  Raises
    :class:`DuplicateKeyError` on equal keys.
    """
    t0 = time.perf_counter()
    a = list(keys)
    n = len(a)
    if len(set(a)) != n:
        raise DuplicateKeyError(find_duplicates(a))
    stats = SortStats()
    if n == 0:
        stats.elapsed = time.perf_counter() - t0
        return a, stats

    starts = [0]
    for i in range(1, n):
        if a[i] < a[i - 1]:
            starts.append(i)
    stats.comparisons = n - 1
    stats.runs_detected = len(starts)
    starts.append(n)

    buf = [None] * n
    src, dst = a, buf
    while len(starts) > 2:
        merged = [0]
        last = len(starts) - 1
        for r in range(0, last, 2):
            lo = starts[r]
            if r + 1 == last:
                # odd run out: carried into the next round unchanged
                hi = starts[r + 1]
                dst[lo:hi] = src[lo:hi]
                stats.moves += hi - lo
            else:
                mid, hi = starts[r + 1], starts[r + 2]
                stats.comparisons += _merge(src, dst, lo, mid, hi)
                stats.moves += hi - lo
            merged.append(hi)
        starts = merged
        src, dst = dst, src

    stats.elapsed = time.perf_counter() - t0
    return src, stats


def _top_down(a: list, buf: list, lo: int, hi: int, stats: SortStats) -> None:
    if hi - lo < 2:
        return
    # left half takes the odd element: on presorted input each merge then
    # costs ceil(len / 2) comparisons
    mid = (lo + hi + 1) // 2
    _top_down(a, buf, lo, mid, stats)
    _top_down(a, buf, mid, hi, stats)
    buf[lo:hi] = a[lo:hi]
    stats.comparisons += _merge(buf, a, lo, mid, hi)
    stats.moves += 2 * (hi - lo)


def baseline_merge_sort(keys: Sequence) -> tuple[list, SortStats]:
    """Top-down merge sort that ignores existing order."""
    t0 = time.perf_counter()
    a = list(keys)
    stats = SortStats()
    if a:
        stats.runs_detected = 1
        _top_down(a, [None] * len(a), 0, len(a), stats)
    stats.elapsed = time.perf_counter() - t0
    return a, stats


def shuffled_adaptive_sort(
    keys: Sequence, config: ShuffleConfig
) -> tuple[list, ShuffleReport, SortStats]:
    """Shuffle high-disorder parts of a copy of ``keys``, then sort it adaptively."""
    work = list(keys)
    if len(set(work)) != len(work):
        raise DuplicateKeyError(find_duplicates(work))
    report = preprocess(work, config)
    out, stats = adaptive_merge_sort(work)
    return out, report, stats
