"""Step-down Runs disorder: counting descents in whole sequences and parts.

A descent is an adjacent pair ``keys[i] > keys[i + 1]``.  Keys are expected
to be mutually distinct integers; :func:`validate_keys` enforces that.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

__all__ = [
    "DisorderReport",
    "DuplicateKeyError",
    "PartitionView",
    "find_duplicates",
    "part_disorders",
    "partition_bounds",
    "step_down_runs",
    "swap_disorder_delta",
    "validate_keys",
]


class DuplicateKeyError(ValueError):
    """Raised when a key sequence contains equal keys."""

    def __init__(self, duplicates: Sequence[int]):
        self.duplicates = list(duplicates)
        shown = ", ".join(map(str, self.duplicates[:10]))
        more = "" if len(self.duplicates) <= 10 else f" (+{len(self.duplicates) - 10} more)"
        super().__init__(f"keys must be distinct; duplicated: {shown}{more}")


def find_duplicates(keys: Iterable[int]) -> list[int]:
    """Return the keys occurring more than once, in ascending order."""
    return sorted(k for k, c in Counter(keys).items() if c > 1)


def validate_keys(keys: Iterable[int]) -> list[int]:
    """Return ``keys`` as a new list, raising :class:`DuplicateKeyError` on repeats."""
    out = list(keys)
    if len(set(out)) != len(out):
        raise DuplicateKeyError(find_duplicates(out))
    return out


def step_down_runs(keys: Sequence[int], lo: int = 0, hi: Optional[int] = None) -> int:
    """Number of descents in ``keys[lo:hi]``."""
    if hi is None:
        hi = len(keys)
    return sum(1 for i in range(lo, hi - 1) if keys[i] > keys[i + 1])


def swap_disorder_delta(
    keys: Sequence[int], i: int, j: int, lo: int = 0, hi: Optional[int] = None
) -> int:
    """Change in descent count of ``keys[lo:hi]`` if ``keys[i]`` and ``keys[j]`` were swapped.

    Only the adjacencies touching ``i`` or ``j`` are inspected, so the cost is
    O(1).  ``keys`` is not modified.  With the default window the result is
    the change of the whole-sequence disorder; a narrower ``[lo, hi)`` ignores
    adjacencies that leave the window.
    """
    if hi is None:
        hi = len(keys)
    if not (lo <= i < j < hi):
        raise IndexError(f"need {lo} <= i < j < {hi}, got i={i}, j={j}")

    def at(p: int) -> int:
        if p == i:
            return keys[j]
        if p == j:
            return keys[i]
        return keys[p]

    # left ends of the adjacencies (p, p+1) that contain i or j
    touched = {p for p in (i - 1, i, j - 1, j) if lo <= p < hi - 1}
    before = sum(1 for p in touched if keys[p] > keys[p + 1])
    after = sum(1 for p in touched if at(p) > at(p + 1))
    return after - before


@dataclass(frozen=True)
class PartitionView:
    """Contiguous split of ``range(n)`` into ``part_count`` half-open blocks."""

    boundaries: tuple[tuple[int, int], ...]

    @property
    def part_count(self) -> int:
        return len(self.boundaries)

    @property
    def n(self) -> int:
        return self.boundaries[-1][1] if self.boundaries else 0

    def lengths(self) -> list[int]:
        return [hi - lo for lo, hi in self.boundaries]


def partition_bounds(n: int, k: int) -> PartitionView:
    """Balanced contiguous split of ``n`` positions into ``min(k, n)`` parts.

    The first ``n % k`` parts get one extra element.
    """
    if k < 1:
        raise ValueError(f"part count must be >= 1, got {k}")
    if n < 0:
        raise ValueError(f"length must be >= 0, got {n}")
    k = min(k, n)
    if k == 0:
        return PartitionView(())
    size, extra = divmod(n, k)
    bounds = []
    start = 0
    for p in range(k):
        end = start + size + (1 if p < extra else 0)
        bounds.append((start, end))
        start = end
    return PartitionView(tuple(bounds))


@dataclass(frozen=True)
class DisorderReport:
    total: int
    per_part: Optional[tuple[int, ...]] = None


def part_disorders(keys: Sequence[int], parts: PartitionView) -> DisorderReport:
    """Disorder of each part and of the whole sequence.

    Descents that straddle a part boundary count toward ``total`` only.
    """
    if parts.n != len(keys):
        raise ValueError(f"partition covers {parts.n} positions, sequence has {len(keys)}")
    per_part = tuple(step_down_runs(keys, lo, hi) for lo, hi in parts.boundaries)
    return DisorderReport(total=step_down_runs(keys), per_part=per_part)
