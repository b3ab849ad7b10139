"""Seeded input generators.

All generators return permutations of ``1..n`` and draw only from
:class:`~runshuffle.rng.RngStream`, so a seed pins the output everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

from runshuffle.disorder import step_down_runs
from runshuffle.rng import RngStream

__all__ = [
    "GenSpec",
    "KINDS",
    "format_keys",
    "generate",
    "nearly_sorted",
    "parse_keys",
    "read_keys",
    "uniform_permutation",
    "with_target_disorder",
    "write_keys",
]

KINDS = ("uniform", "target_disorder", "nearly_sorted")


@dataclass(frozen=True)
class GenSpec:
    n: int
    kind: str = "uniform"
    param: int = 0
    seed: int = 0
    interleave: bool = False

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind != "uniform" and not 0 <= self.param <= max(0, self.n - 1):
            raise ValueError(f"{self.kind} parameter must lie in [0, {max(0, self.n - 1)}], got {self.param}")


def uniform_permutation(n: int, seed: int) -> list[int]:
    """Uniformly random permutation of ``1..n`` (Fisher-Yates)."""
    keys = list(range(1, n + 1))
    RngStream(seed).shuffle(keys)
    return keys


class _Fenwick:
    """Order-statistic tree over ``0..n-1`` holding 0/1 counts."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.tree = [0] * (n + 1)
        for i in range(1, n + 1):
            self.tree[i] += 1
            parent = i + (i & -i)
            if parent <= n:
                self.tree[parent] += self.tree[i]
        self.top = 1 << (n.bit_length() - 1) if n else 0

    def pop_kth(self, k: int) -> int:
        """Remove and return the ``k``-th (0-based) present value."""
        pos = 0
        step = self.top
        while step:
            nxt = pos + step
            if nxt <= self.n and self.tree[nxt] <= k:
                pos = nxt
                k -= self.tree[nxt]
            step >>= 1
        i = pos + 1
        while i <= self.n:
            self.tree[i] -= 1
            i += i & -i
        return pos


def with_target_disorder(n: int, target: int, seed: int, interleave: bool = False) -> list[int]:
    """Random permutation of ``1..n`` with exactly ``target`` descents.

    The descent positions are a uniform ``target``-subset of the ``n - 1``
    adjacencies; they cut the sequence into ``target + 1`` ascending runs.

    By default each run receives a block of consecutive values, the first run
    the highest block and each later run the next lower one, so every cut is
    a descent and no other adjacency is.

    With ``interleave=True`` the values are drawn through relative ranks
    instead: position ``i`` takes rank ``r_i`` among the first ``i + 1``
    values and ``x[i-1] > x[i]`` exactly when ``r_i <= r_{i-1}``.  Each rank
    is uniform over the range giving the wanted comparison, which mixes the
    value ranges of neighbouring runs.

    Neither variant is uniform over the permutations with that descent count.
    """
    if n == 0:
        if target != 0:
            raise ValueError("an empty sequence has no descents")
        return []
    if not 0 <= target <= n - 1:
        raise ValueError(f"target disorder must lie in [0, {n - 1}], got {target}")
    rng = RngStream(seed)
    cuts = sorted(p + 1 for p in rng.sample(n - 1, target))
    keys = _interleaved(n, set(c - 1 for c in cuts), rng) if interleave else _blocks(n, cuts)
    measured = step_down_runs(keys)
    if measured != target:
        raise AssertionError(f"constructed disorder {measured} != target {target}")
    return keys


def _blocks(n: int, cuts: list[int]) -> list[int]:
    keys = []
    top = n
    for lo, hi in zip([0] + cuts, cuts + [n]):
        keys.extend(range(top - (hi - lo) + 1, top + 1))
        top -= hi - lo
    return keys


def _interleaved(n: int, descents: set[int], rng: RngStream) -> list[int]:
    ranks = [0] * n
    for i in range(1, n):
        prev = ranks[i - 1]
        if (i - 1) in descents:
            ranks[i] = rng.below(prev + 1)
        else:
            ranks[i] = prev + 1 + rng.below(i - prev)
    # walking backwards, each element's rank among those left is its value
    free = _Fenwick(n)
    keys = [0] * n
    for i in range(n - 1, -1, -1):
        keys[i] = free.pop_kth(ranks[i]) + 1
    return keys


def nearly_sorted(n: int, swaps: int, seed: int) -> list[int]:
    """``1..n`` in order, then ``swaps`` random transpositions."""
    keys = list(range(1, n + 1))
    if n < 2:
        return keys
    rng = RngStream(seed)
    for _ in range(swaps):
        i = rng.below(n)
        j = rng.below(n - 1)
        if j >= i:
            j += 1
        keys[i], keys[j] = keys[j], keys[i]
    return keys


def generate(spec: GenSpec) -> list[int]:
    if spec.kind == "uniform":
        return uniform_permutation(spec.n, spec.seed)
    if spec.kind == "target_disorder":
        return with_target_disorder(spec.n, spec.param, spec.seed, interleave=spec.interleave)
    return nearly_sorted(spec.n, spec.param, spec.seed)


def parse_keys(lines: Iterable[str], source: str = "<input>") -> list[int]:
    """Parse newline-delimited decimal integers; blank lines are skipped."""
    keys = []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            keys.append(int(text, 10))
        except ValueError:
            raise ValueError(f"{source}:{lineno}: not a decimal integer: {text!r}") from None
    return keys


def read_keys(path: Union[str, Path]) -> list[int]:
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_keys(fh, str(path))


def format_keys(keys: Iterable[int]) -> str:
    return "".join(f"{k}\n" for k in keys)


def write_keys(path: Union[str, Path], keys: Iterable[int]) -> None:
    Path(path).write_text(format_keys(keys), encoding="ascii")
