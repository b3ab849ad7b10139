"""Random-swap preprocessing of high-disorder parts.

The sequence is split into ``k`` contiguous parts.  Every part whose descent
count is strictly greater than ``z`` receives random two-element swaps:

``blind``
    ``floor(part_len / m)`` swaps, applied unconditionally.
``guarded``
    ``floor(part_len / m)`` attempts; a swap is kept only if it lowers the
    part's own descent count.
``fixed:<s>``
    exactly ``s`` unconditional swaps.

Each part draws from its own sub-stream ``derive_seed(seed, part_index)`` so
the outcome does not depend on the order in which parts are processed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import MutableSequence

from runshuffle.disorder import partition_bounds, step_down_runs, swap_disorder_delta
from runshuffle.rng import RngStream, derive_seed

__all__ = [
    "POLICIES",
    "PartShuffle",
    "ShuffleConfig",
    "ShuffleReport",
    "draw_pair",
    "parse_policy",
    "preprocess",
    "shuffle_part",
    "swap_budget",
]

POLICIES = ("blind", "guarded", "fixed")


def parse_policy(text: str) -> tuple[str, int]:
    """Parse ``blind``, ``guarded`` or ``fixed:<s>`` into ``(name, fixed_swaps)``."""
    name, _, arg = text.strip().partition(":")
    if name in ("blind", "guarded") and not arg:
        return name, 0
    if name == "fixed":
        try:
            swaps = int(arg)
        except ValueError:
            raise ValueError(f"fixed policy needs a swap count, e.g. fixed:2; got {text!r}") from None
        if swaps < 0:
            raise ValueError(f"fixed swap count must be >= 0, got {swaps}")
        return name, swaps
    raise ValueError(f"unknown policy {text!r}; expected blind, guarded or fixed:<s>")


@dataclass(frozen=True)
class ShuffleConfig:
    k: int = 16
    z: int = 10
    m: int = 2
    policy: str = "guarded"
    fixed_swaps: int = 0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.z < 0:
            raise ValueError(f"z must be >= 0, got {self.z}")
        if self.policy not in POLICIES:
            raise ValueError(f"unknown policy {self.policy!r}")
        if self.fixed_swaps < 0:
            raise ValueError(f"fixed_swaps must be >= 0, got {self.fixed_swaps}")

    @classmethod
    def from_policy_string(cls, policy: str, **kwargs) -> "ShuffleConfig":
        name, swaps = parse_policy(policy)
        return cls(policy=name, fixed_swaps=swaps, **kwargs)

    @property
    def policy_label(self) -> str:
        return f"fixed:{self.fixed_swaps}" if self.policy == "fixed" else self.policy

    def budget(self, part_len: int) -> int:
        if self.policy == "fixed":
            return self.fixed_swaps
        return swap_budget(part_len, self.m)


@dataclass(frozen=True)
class PartShuffle:
    start: int
    end: int
    disorder_before: int
    disorder_after: int
    swaps_attempted: int
    swaps_applied: int
    flagged: bool


@dataclass
class ShuffleReport:
    policy: str
    per_part: list[PartShuffle] = field(default_factory=list)
    total_before: int = 0
    total_after: int = 0
    elapsed: float = 0.0

    @property
    def swaps_attempted(self) -> int:
        return sum(p.swaps_attempted for p in self.per_part)

    @property
    def swaps_applied(self) -> int:
        return sum(p.swaps_applied for p in self.per_part)

    @property
    def parts_flagged(self) -> int:
        return sum(p.flagged for p in self.per_part)


def swap_budget(part_len: int, m: int) -> int:
    """Swaps allowed in one flagged part: ``part_len // m``."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return part_len // m


def draw_pair(rng: RngStream, length: int) -> tuple[int, int]:
    """Uniform unordered pair ``i < j`` of distinct indices in ``[0, length)``."""
    if length < 2:
        raise ValueError(f"need at least two positions, got {length}")
    a = rng.below(length)
    b = rng.below(length - 1)
    if b >= a:
        b += 1
    return (a, b) if a < b else (b, a)


def shuffle_part(
    keys: MutableSequence[int],
    start: int,
    end: int,
    budget: int,
    policy: str,
    rng: RngStream,
) -> tuple[PartShuffle, int]:
    """Swap random pairs inside ``keys[start:end]`` in place.

    ``policy`` is ``"guarded"`` or anything unconditional (``"blind"``,
    ``"fixed"``).  Returns the part record and the change in the
    whole-sequence descent count, which differs from the part-local change
    when a swap touches the part's first or last position.
    """
    if not 0 <= start <= end <= len(keys):
        raise IndexError(f"part [{start}, {end}) outside sequence of length {len(keys)}")
    if budget < 0:
        raise ValueError(f"budget must be >= 0, got {budget}")
    length = end - start
    before = step_down_runs(keys, start, end)
    local = before
    global_delta = 0
    attempted = applied = 0
    if length >= 2:
        guarded = policy == "guarded"
        for _ in range(budget):
            a, b = draw_pair(rng, length)
            i, j = start + a, start + b
            attempted += 1
            delta = swap_disorder_delta(keys, i, j, start, end)
            if guarded and delta >= 0:
                continue
            global_delta += swap_disorder_delta(keys, i, j)
            keys[i], keys[j] = keys[j], keys[i]
            local += delta
            applied += 1
    record = PartShuffle(start, end, before, local, attempted, applied, flagged=True)
    return record, global_delta


def preprocess(keys: MutableSequence[int], config: ShuffleConfig) -> ShuffleReport:
    """Shuffle, in place, every part of ``keys`` whose disorder exceeds ``config.z``."""
    t0 = time.perf_counter()
    parts = partition_bounds(len(keys), config.k)
    report = ShuffleReport(policy=config.policy_label)
    total = step_down_runs(keys)
    report.total_before = total
    for index, (lo, hi) in enumerate(parts.boundaries):
        disorder = step_down_runs(keys, lo, hi)
        if disorder <= config.z:
            report.per_part.append(PartShuffle(lo, hi, disorder, disorder, 0, 0, flagged=False))
            continue
        rng = RngStream(derive_seed(config.seed, index))
        record, delta = shuffle_part(keys, lo, hi, config.budget(hi - lo), config.policy, rng)
        report.per_part.append(record)
        total += delta
    report.total_after = total
    report.elapsed = time.perf_counter() - t0
    return report
