"""Exact counting behind the descent distribution of random permutations.

Eulerian numbers are computed with arbitrary-precision integers and every
probability is a :class:`fractions.Fraction`; floats appear only when a value
is rendered for a report.

Two indexings are used:

* ``eulerian_runs(n, k)``: permutations of ``n`` with exactly ``k`` ascending
  runs, ``1 <= k <= n``.
* ``descent_permutation_count(n, d)``: permutations with exactly ``d``
  descents, i.e. ``eulerian_runs(n, d + 1)``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import NamedTuple

__all__ = [
    "DEFAULT_CAP",
    "Improvement",
    "binomial",
    "claim1_threshold",
    "claim2_at_least",
    "claim2_below",
    "descent_distribution",
    "descent_permutation_count",
    "eulerian_recurrence",
    "eulerian_runs",
    "improvement_condition",
    "p_less",
]

DEFAULT_CAP = 200

_rows: dict[int, tuple[int, ...]] = {}
_rows_lock = threading.Lock()


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)``; zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def _alternating_sum(k: int, powers: list[int], coeffs: list[int]) -> int:
    total = 0
    for j in range(k + 1):
        term = powers[k - j] * coeffs[j]
        total += -term if j & 1 else term
    return total


def eulerian_runs(n: int, k: int) -> int:
    """Permutations of ``n`` elements with exactly ``k`` ascending runs.

    Evaluated from the explicit alternating sum
    ``sum_{j=0..k} (-1)**j * (k - j)**n * C(n + 1, j)``.
    """
    if n < 1 or k < 1 or k > n:
        return 0
    powers = [v**n for v in range(k + 1)]
    coeffs = [binomial(n + 1, j) for j in range(k + 1)]
    value = _alternating_sum(k, powers, coeffs)
    assert value >= 0
    return value


def _descent_row(n: int) -> tuple[int, ...]:
    """Counts of permutations of ``n`` by descent number, via the explicit formula."""
    row = _rows.get(n)
    if row is not None:
        return row
    powers = [v**n for v in range(n + 1)]
    coeffs = [binomial(n + 1, j) for j in range(n + 1)]
    row = tuple(_alternating_sum(d + 1, powers, coeffs) for d in range(n))
    with _rows_lock:
        _rows.setdefault(n, row)
    return row


def eulerian_recurrence(n_max: int) -> list[list[int]]:
    """Table ``A[n][k]`` of run counts from ``A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)``.

    Independent of the alternating-sum formula; used as its cross-check.
    Row ``n`` has indices ``0..n`` with ``A[n][0] = 0`` for ``n >= 1``.
    """
    # A(0,0) = 1 seeds A(1,1); column 0 is zero from then on
    table = [[1]]
    for n in range(1, n_max + 1):
        prev = table[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            left = prev[k] if k < len(prev) else 0
            row[k] = k * left + (n - k + 1) * prev[k - 1]
        table.append(row)
    return table


def descent_permutation_count(n: int, d: int) -> int:
    """Permutations of ``n`` elements with exactly ``d`` descents."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return eulerian_runs(n, d + 1)


def descent_distribution(n: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Row ``[count(d) for d in 0..n-1]``; sums to ``n!`` and is palindromic."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the distribution cap {cap}")
    return list(_descent_row(n))


def p_less(n: int, z: int) -> Fraction:
    """Probability that a uniformly random permutation of ``n`` has fewer than ``z`` descents.

    This is the model probability that a part with disorder ``z`` ends up
    with a smaller disorder after shuffling, when the post-shuffle order is
    treated as uniform over all ``n!`` permutations.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= z <= n - 1:
        raise ValueError(f"z must lie in [0, {n - 1}], got {z}")
    row = _descent_row(n)
    return Fraction(sum(row[:z]), math.factorial(n))


def claim1_threshold(n: int) -> int:
    """``n // 2 + 1``; above it the model probability of improvement exceeds 1/2."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n // 2 + 1


def _check_prob(p: Fraction) -> Fraction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"probability out of range: {p}")
    return p


def claim2_at_least(l: int, c: int, p: Fraction) -> Fraction:
    """``P[X >= c]`` for ``X ~ Binomial(l, p)``, exactly."""
    p = _check_prob(p)
    if l < 0 or c < 0 or c > l:
        raise ValueError(f"need 0 <= c <= l, got c={c}, l={l}")
    q = 1 - p
    return sum((binomial(l, x) * p**x * q ** (l - x) for x in range(c, l + 1)), Fraction(0))


def claim2_below(l: int, c: int, p: Fraction) -> Fraction:
    """``P[X < c]`` for ``X ~ Binomial(l, p)``, summed independently of the upper tail."""
    p = _check_prob(p)
    if l < 0 or c < 0 or c > l:
        raise ValueError(f"need 0 <= c <= l, got c={c}, l={l}")
    q = 1 - p
    return sum((binomial(l, x) * p**x * q ** (l - x) for x in range(c)), Fraction(0))


class Improvement(NamedTuple):
    holds: bool
    ratio: Fraction

    @property
    def ratio_float(self) -> float:
        return float(self.ratio)


def improvement_condition(m_before: int, m_after: int, m: int) -> Improvement:
    """Whether ``(m_before + 1) / (m_after + 1) > 2 ** (1 / m)``.

    Decided exactly as ``(m_before + 1) ** m > 2 * (m_after + 1) ** m``.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if m_before < 0 or m_after < 0:
        raise ValueError("disorder values must be nonnegative")
    holds = (m_before + 1) ** m > 2 * (m_after + 1) ** m
    return Improvement(holds, Fraction(m_before + 1, m_after + 1))
