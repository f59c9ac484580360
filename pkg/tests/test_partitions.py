import pytest
from hypothesis import given, strategies as st

from chernnumbers.partitions import as_partition, index_of, monomial_name, partitions_of


def euler_partition_count(n):
    """p(n) from Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_four_matches_coordinate_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
    assert [monomial_name(p) for p in partitions_of(4)] == ["c4", "c1c3", "c2^2", "c1^2c2", "c1^4"]


def test_three_matches_coordinate_order():
    assert [monomial_name(p) for p in partitions_of(3)] == ["c3", "c1c2", "c1^3"]


def test_zero_is_empty_partition():
    assert partitions_of(0) == ((),)


def test_six_has_eleven():
    assert len(partitions_of(6)) == 11


@pytest.mark.parametrize("n", range(13))
def test_counts_and_weights(n):
    parts = partitions_of(n)
    assert len(parts) == euler_partition_count(n)
    assert len(set(parts)) == len(parts)
    for p in parts:
        assert sum(p) == n
        assert list(p) == sorted(p, reverse=True)
        assert all(x >= 1 for x in p)


def test_index_examples():
    assert index_of((4,), 4) == 0
    assert index_of((1, 1, 1, 1), 4) == 4
    assert index_of((2, 1, 1), 4) == 3
    assert index_of((1, 2, 1), 4) == 3


def test_index_weight_mismatch():
    with pytest.raises(ValueError):
        index_of((2, 1), 4)


@given(st.integers(0, 12))
def test_index_roundtrip(n):
    for i, p in enumerate(partitions_of(n)):
        assert index_of(p, n) == i


def test_negative_rejected():
    with pytest.raises(ValueError):
        partitions_of(-1)
    with pytest.raises(ValueError):
        as_partition((2, 0))
