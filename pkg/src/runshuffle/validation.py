"""Checks of the descent-distribution analysis against enumeration and simulation.

Monte Carlo routines sample permutations in bulk with numpy's PCG64; the
swap pairs come from :class:`~runshuffle.rng.RngStream` and disorder changes
from :func:`~runshuffle.disorder.swap_disorder_delta`, i.e. the same code the
shuffler uses.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from runshuffle.combinatorics import (
    claim1_threshold,
    claim2_at_least,
    descent_distribution,
    descent_permutation_count,
    p_less,
)
from runshuffle.datagen import with_target_disorder
from runshuffle.disorder import swap_disorder_delta
from runshuffle.rng import RngStream, derive_seed
from runshuffle.shuffle import draw_pair

EXHAUSTIVE_MAX_N = 9

_BATCH = 10_000


def exhaustive_histogram(n: int) -> list[int]:
    """Descent counts over all ``n!`` permutations, by brute force."""
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise ValueError(f"exhaustive enumeration limited to 1 <= n <= {EXHAUSTIVE_MAX_N}, got {n}")
    hist = [0] * n
    for perm in itertools.permutations(range(n)):
        hist[sum(a > b for a, b in zip(perm, perm[1:]))] += 1
    return hist


def _descents(rows: np.ndarray) -> np.ndarray:
    return np.count_nonzero(rows[:, :-1] > rows[:, 1:], axis=1)


def _uniform_rows(gen: np.random.Generator, count: int, n: int) -> np.ndarray:
    dtype = np.int16 if n < 2**15 else np.int32
    return gen.permuted(np.broadcast_to(np.arange(n, dtype=dtype), (count, n)), axis=1)


@dataclass(frozen=True)
class ModelCheck:
    n: int
    threshold: int
    failures: tuple[int, ...]
    p_at_max: Fraction

    @property
    def passed(self) -> bool:
        return not self.failures


def model_check(n: int) -> ModelCheck:
    """Evaluate ``p_less(n, z) > 1/2`` for every ``z`` above the threshold, exactly."""
    threshold = claim1_threshold(n)
    failures = tuple(z for z in range(threshold + 1, n) if not p_less(n, z) > Fraction(1, 2))
    return ModelCheck(n, threshold, failures, p_less(n, n - 1) if n > 1 else Fraction(0))


@dataclass(frozen=True)
class KernelEstimate:
    n: int
    z: int
    trials: int
    improved: int
    model: Fraction
    sampler: str

    @property
    def empirical(self) -> float:
        return self.improved / self.trials if self.trials else float("nan")


def one_swap_kernel(n: int, z: int, trials: int, seed: int) -> KernelEstimate:
    """Probability that one blind swap lowers the disorder of a permutation with disorder ``z``.

    Start permutations are uniform among those with disorder ``z``, drawn by
    rejection, whenever that disorder level carries at least 1e-4 of the
    probability mass; otherwise the (non-uniform) target-disorder generator
    is used and ``sampler`` says so.
    """
    if n < 2 or not 0 <= z <= n - 1:
        raise ValueError(f"need n >= 2 and 0 <= z <= n-1, got n={n}, z={z}")
    mass = Fraction(descent_permutation_count(n, z), math.factorial(n))
    pair_rng = RngStream(derive_seed(seed, 1))
    improved = done = 0
    if mass >= Fraction(1, 10_000):
        sampler = "rejection"
        gen = np.random.Generator(np.random.PCG64(seed))
        while done < trials:
            rows = _uniform_rows(gen, _BATCH, n)
            for row in rows[_descents(rows) == z]:
                i, j = draw_pair(pair_rng, n)
                improved += swap_disorder_delta(row, i, j) < 0
                done += 1
                if done == trials:
                    break
    else:
        sampler = "target_disorder"
        for t in range(trials):
            keys = with_target_disorder(n, z, derive_seed(seed, 2 + t), interleave=True)
            i, j = draw_pair(pair_rng, n)
            improved += swap_disorder_delta(keys, i, j) < 0
        done = trials
    return KernelEstimate(n, z, done, improved, p_less(n, z), sampler)


@dataclass(frozen=True)
class Claim2Estimate:
    parts: int
    at_least: int
    part_size: int
    z: int
    trials: int
    p: Fraction
    exact: Fraction
    empirical: float

    @property
    def error(self) -> float:
        return abs(self.empirical - float(self.exact))


def claim2_simulation(
    parts: int, at_least: Sequence[int], part_size: int, z: int, trials: int, seed: int
) -> list[Claim2Estimate]:
    """Simulate ``parts`` independent parts per trial and count those ending below ``z``.

    Each part's post-shuffle order is a uniform permutation of ``part_size``
    keys, so a part improves with probability ``p_less(part_size, z)`` and
    the number of improved parts should follow the binomial tail.
    """
    p = p_less(part_size, z)
    hits = np.zeros(parts + 1, dtype=np.int64)
    gen = np.random.Generator(np.random.PCG64(seed))
    left = trials
    while left:
        batch = min(left, _BATCH)
        rows = _uniform_rows(gen, batch * parts, part_size)
        improved = (_descents(rows) < z).reshape(batch, parts).sum(axis=1)
        hits += np.bincount(improved, minlength=parts + 1)
        left -= batch
    tail = np.cumsum(hits[::-1])[::-1]
    return [
        Claim2Estimate(parts, c, part_size, z, trials, p, claim2_at_least(parts, c, p), float(tail[c]) / trials)
        for c in at_least
    ]


def blind_swap_mean_delta(n: int, trials: int, seed: int) -> float:
    """Mean disorder change from one blind swap on independent uniform permutations."""
    gen = np.random.Generator(np.random.PCG64(seed))
    pair_rng = RngStream(derive_seed(seed, 1))
    total = 0
    left = trials
    while left:
        batch = min(left, _BATCH)
        for row in _uniform_rows(gen, batch, n):
            i, j = draw_pair(pair_rng, n)
            total += swap_disorder_delta(row, i, j)
        left -= batch
    return total / trials


def exhaustive_matches(n: int) -> bool:
    return exhaustive_histogram(n) == descent_distribution(n)
