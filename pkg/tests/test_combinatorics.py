import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from runshuffle.combinatorics import (
    binomial,
    claim1_threshold,
    claim2_at_least,
    claim2_below,
    descent_distribution,
    descent_permutation_count,
    eulerian_recurrence,
    eulerian_runs,
    improvement_condition,
    p_less,
)

# permutations of |X| keys by number of descents
EULERIAN_ROWS = {
    1: [1],
    2: [1, 1],
    3: [1, 4, 1],
    4: [1, 11, 11, 1],
    5: [1, 26, 66, 26, 1],
    6: [1, 57, 302, 302, 57, 1],
    7: [1, 120, 1191, 2416, 1191, 120, 1],
    8: [1, 247, 4293, 15619, 15619, 4293, 247, 1],
}


def pascal(n_max):
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return rows


def test_binomial_examples():
    assert binomial(5, 2) == 10
    assert binomial(9, 0) == 1
    assert binomial(52, 26) == pascal(52)[52][26]
    assert pascal(52)[52][26] == 495918532948104
    assert binomial(4, -1) == 0
    assert binomial(4, 5) == 0


def test_binomial_matches_pascal():
    rows = pascal(60)
    for n, row in enumerate(rows):
        assert [binomial(n, k) for k in range(n + 1)] == row


def test_eulerian_runs_examples():
    assert eulerian_runs(4, 2) == 11
    assert eulerian_runs(6, 3) == 302
    for n in range(1, 30):
        assert eulerian_runs(n, 1) == 1
    assert eulerian_runs(5, 0) == 0
    assert eulerian_runs(5, 6) == 0


def test_descent_count_examples():
    assert descent_permutation_count(8, 3) == 15619
    assert descent_permutation_count(7, 4) == 1191
    assert descent_permutation_count(5, 0) == 1
    assert descent_permutation_count(5, 5) == 0
    assert descent_permutation_count(5, -1) == 0


@pytest.mark.parametrize("n", sorted(EULERIAN_ROWS))
def test_distribution_matches_table(n):
    assert descent_distribution(n) == EULERIAN_ROWS[n]


def test_distribution_errors_and_cap():
    with pytest.raises(ValueError):
        descent_distribution(0)
    with pytest.raises(ValueError):
        descent_distribution(201)
    assert len(descent_distribution(201, cap=250)) == 201
    assert sum(descent_distribution(8)) == 40320


def test_formula_matches_recurrence_to_60():
    table = eulerian_recurrence(60)
    for n in range(1, 61):
        assert [eulerian_runs(n, k) for k in range(1, n + 1)] == table[n][1:]


@pytest.mark.parametrize("n", [1, 2, 9, 17, 40, 100])
def test_distribution_invariants(n):
    row = descent_distribution(n)
    assert sum(row) == math.factorial(n)
    assert row[0] == row[-1] == 1
    assert row == row[::-1]
    for m in range(1, (n - 1) // 2 + 1):
        assert row[m - 1] < row[m]


def test_p_less_examples():
    assert p_less(4, 3) == Fraction(23, 24)
    assert p_less(3, 2) == Fraction(5, 6)
    assert p_less(9, 0) == 0
    with pytest.raises(ValueError):
        p_less(4, 4)
    with pytest.raises(ValueError):
        p_less(4, -1)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 13, 31, 64])
def test_p_less_monotone_and_claim1(n):
    values = [p_less(n, z) for z in range(n)]
    assert all(a <= b for a, b in zip(values, values[1:]))
    for z in range(claim1_threshold(n) + 1, n):
        assert values[z] > Fraction(1, 2)
    assert values[-1] == Fraction(math.factorial(n) - 1, math.factorial(n))


def test_claim1_threshold_examples():
    assert claim1_threshold(8) == 5
    assert claim1_threshold(7) == 4
    assert claim1_threshold(312) == 157


def test_claim2_examples():
    p = Fraction(3, 7)
    assert claim2_at_least(5, 0, p) == 1
    assert claim2_at_least(1, 1, p) == p
    assert claim2_at_least(2, 1, Fraction(1, 2)) == Fraction(3, 4)
    with pytest.raises(ValueError):
        claim2_at_least(3, 4, p)
    with pytest.raises(ValueError):
        claim2_at_least(3, 1, Fraction(3, 2))


def enumerate_tail(l, c, p):
    """Sum outcome probabilities over all 2**l success patterns."""
    total = Fraction(0)
    for mask in range(1 << l):
        x = bin(mask).count("1")
        if x >= c:
            total += p**x * (1 - p) ** (l - x)
    return total


@pytest.mark.parametrize("l, c, p", [(4, 2, Fraction(1, 3)), (6, 6, Fraction(9, 10)), (7, 0, Fraction(1, 2)), (5, 3, Fraction(0))])
def test_claim2_matches_enumeration(l, c, p):
    assert claim2_at_least(l, c, p) == enumerate_tail(l, c, p)


@given(st.integers(0, 30), st.data(), st.fractions(min_value=0, max_value=1, max_denominator=1000))
def test_claim2_tails_sum_to_one(l, data, p):
    c = data.draw(st.integers(0, l))
    assert claim2_at_least(l, c, p) + claim2_below(l, c, p) == 1


def test_improvement_condition_examples():
    res = improvement_condition(2503, 2245, 2)
    assert not res.holds
    assert res.ratio == Fraction(2504, 2246)
    assert 2504**2 == 6270016 and 2 * 2246**2 == 10089032
    assert improvement_condition(3, 1, 2).holds
    for m in (1, 2, 5):
        for big_m in (0, 7, 2500):
            assert not improvement_condition(big_m, big_m, m).holds
    with pytest.raises(ValueError):
        improvement_condition(3, 1, 0)


@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(1, 8))
def test_improvement_condition_agrees_with_float_away_from_boundary(before, after, m):
    ratio = (before + 1) / (after + 1)
    target = 2 ** (1 / m)
    res = improvement_condition(before, after, m)
    if abs(ratio - target) > 1e-9:
        assert res.holds == (ratio > target)
