import pytest
from hypothesis import given, strategies as st

from runshuffle.disorder import (
    DuplicateKeyError,
    find_duplicates,
    part_disorders,
    partition_bounds,
    step_down_runs,
    swap_disorder_delta,
    validate_keys,
)

perms = st.integers(min_value=0, max_value=40).flatmap(lambda n: st.permutations(list(range(n))))


def brute_descents(xs):
    count = 0
    for i in range(len(xs) - 1):
        if xs[i] > xs[i + 1]:
            count += 1
    return count


@pytest.mark.parametrize(
    "keys, expected",
    [
        ([1, 2, 3, 4], 0),
        ([4, 3, 2, 1], 3),
        ([5, 1, 4, 2, 3], 2),
        ([], 0),
        ([7], 0),
    ],
)
def test_step_down_runs_examples(keys, expected):
    assert step_down_runs(keys) == expected


@pytest.mark.parametrize(
    "keys, i, j, expected",
    [
        ([1, 2, 3], 0, 2, 2),
        ([2, 1], 0, 1, -1),
        ([1, 3, 2, 4], 1, 2, -1),
    ],
)
def test_swap_delta_examples(keys, i, j, expected):
    before = list(keys)
    assert swap_disorder_delta(keys, i, j) == expected
    assert keys == before


@pytest.mark.parametrize("i, j", [(-1, 2), (2, 2), (3, 1), (0, 3)])
def test_swap_delta_bad_indices(i, j):
    with pytest.raises(IndexError):
        swap_disorder_delta([1, 2, 3], i, j)


@given(perms)
def test_disorder_range_and_reversal_duality(xs):
    m = step_down_runs(xs)
    assert m == brute_descents(xs)
    assert 0 <= m <= max(0, len(xs) - 1)
    if xs:
        assert m + step_down_runs(xs[::-1]) == len(xs) - 1


@given(perms.filter(lambda xs: len(xs) >= 2), st.data())
def test_swap_delta_matches_recount(xs, data):
    n = len(xs)
    i = data.draw(st.integers(0, n - 2))
    j = data.draw(st.integers(i + 1, n - 1))
    delta = swap_disorder_delta(xs, i, j)
    assert abs(delta) <= (3 if j == i + 1 else 4)
    ys = list(xs)
    ys[i], ys[j] = ys[j], ys[i]
    assert step_down_runs(ys) == step_down_runs(xs) + delta


@given(perms.filter(lambda xs: len(xs) >= 2), st.data())
def test_windowed_delta_matches_window_recount(xs, data):
    n = len(xs)
    lo = data.draw(st.integers(0, n - 2))
    hi = data.draw(st.integers(lo + 2, n))
    i = data.draw(st.integers(lo, hi - 2))
    j = data.draw(st.integers(i + 1, hi - 1))
    ys = list(xs)
    ys[i], ys[j] = ys[j], ys[i]
    assert step_down_runs(ys, lo, hi) - step_down_runs(xs, lo, hi) == swap_disorder_delta(xs, i, j, lo, hi)


def test_partition_examples():
    assert partition_bounds(10, 2).boundaries == ((0, 5), (5, 10))
    assert partition_bounds(3, 5).boundaries == ((0, 1), (1, 2), (2, 3))
    assert partition_bounds(3, 5).part_count == 3
    view = partition_bounds(5000, 16)
    assert view.part_count == 16
    assert view.lengths() == [313] * 8 + [312] * 8
    assert partition_bounds(0, 4).part_count == 0


def test_partition_rejects_zero_parts():
    with pytest.raises(ValueError):
        partition_bounds(10, 0)


@given(st.integers(0, 500), st.integers(1, 64))
def test_partition_is_balanced_cover(n, k):
    view = partition_bounds(n, k)
    assert view.part_count == min(n, k)
    pos = 0
    for lo, hi in view.boundaries:
        assert lo == pos and hi > lo
        pos = hi
    assert pos == n
    lengths = view.lengths()
    if lengths:
        assert max(lengths) - min(lengths) <= 1


@pytest.mark.parametrize(
    "keys, k, per_part, total",
    [
        ([1, 2, 4, 3], 2, (0, 1), 1),
        ([3, 1, 4, 2], 2, (1, 1), 2),
        ([1, 3, 2, 4], 2, (0, 0), 1),
    ],
)
def test_part_disorder_examples(keys, k, per_part, total):
    report = part_disorders(keys, partition_bounds(len(keys), k))
    assert report.per_part == per_part
    assert report.total == total


def test_part_disorders_length_mismatch():
    with pytest.raises(ValueError):
        part_disorders([1, 2, 3], partition_bounds(4, 2))


@given(perms, st.integers(1, 12))
def test_part_sum_bounds(xs, k):
    view = partition_bounds(len(xs), k)
    report = part_disorders(xs, view)
    s = sum(report.per_part)
    assert s <= report.total <= s + max(0, view.part_count - 1)


def test_validate_keys_reports_duplicates():
    assert validate_keys((3, 1, 2)) == [3, 1, 2]
    with pytest.raises(DuplicateKeyError) as info:
        validate_keys([5, 1, 5, 2, 1])
    assert info.value.duplicates == [1, 5]
    assert find_duplicates([1, 2, 3]) == []
