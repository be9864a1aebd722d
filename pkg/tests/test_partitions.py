from itertools import permutations
from math import factorial

import pytest
from hypothesis import given

from strategies import partitions
from tatemotive.partitions import (
    Partition,
    contains_rectangle,
    diagram_contains,
    irreducible_dimension,
    parse_partition,
    partitions_of,
    rectangle,
    transpose,
)


def euler_partition_count(n):
    """p(n) by the pentagonal number recurrence."""
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


def count_standard_tableaux(shape):
    """Brute force: fillings of the diagram by 1..n increasing along rows and columns."""
    cells = Partition(shape).cells()
    n = len(cells)
    count = 0
    for perm in permutations(range(1, n + 1)):
        val = dict(zip(cells, perm))
        if all(val[(i, j)] < val[(i, j + 1)] for i, j in cells if (i, j + 1) in val) and \
           all(val[(i, j)] < val[(i + 1, j)] for i, j in cells if (i + 1, j) in val):
            count += 1
    return count


def test_partition_normalizes_trailing_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition() == ()
    assert Partition((3, 1)).size == 4


@pytest.mark.parametrize("bad", [(1, 2), (2, -1), (0, 1)])
def test_partition_rejects_invalid(bad):
    with pytest.raises(ValueError):
        Partition(bad)


def test_parse_and_format_roundtrip():
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[ 3, 1 ]") == (3, 1)
    assert parse_partition("[]") == ()
    assert str(Partition((3, 1))) == "[3,1]"
    with pytest.raises(ValueError):
        parse_partition("3,1")


@pytest.mark.parametrize("lam, expected", [
    ((), ()),
    ((4,), (1, 1, 1, 1)),
    ((3, 1), (2, 1, 1)),
])
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected


@given(partitions(max_size=12))
def test_transpose_involutive(lam):
    assert transpose(transpose(lam)) == lam


def test_diagram_contains_examples():
    assert diagram_contains((3, 2), (2, 1))
    assert not diagram_contains((3, 2), (1, 1, 1))
    assert diagram_contains((3, 2), ())
    assert diagram_contains((), ())


@given(partitions(max_size=8), partitions(max_size=8))
def test_containment_commutes_with_transpose(lam, mu):
    assert diagram_contains(lam, mu) == diagram_contains(transpose(lam), transpose(mu))


def test_contains_rectangle_examples():
    assert contains_rectangle((2, 2), 2, 2)
    assert not contains_rectangle((3, 1), 2, 2)
    assert contains_rectangle((5,), 0, 7)


@given(partitions(max_size=10))
def test_contains_rectangle_matches_diagram_containment(mu):
    for r in range(5):
        for c in range(5):
            assert contains_rectangle(mu, r, c) == diagram_contains(mu, rectangle(r, c))


def test_partitions_of_small():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]


def test_partitions_of_eight_counted_by_euler():
    assert euler_partition_count(8) == 22
    assert len(partitions_of(8)) == 22


@pytest.mark.parametrize("n", range(13))
def test_partitions_of_matches_euler_and_is_reverse_lex(n):
    parts = partitions_of(n)
    assert len(parts) == euler_partition_count(n)
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts, reverse=True)
    assert all(p.size == n for p in parts)


def test_irreducible_dimension_examples():
    assert irreducible_dimension((5,)) == 1
    assert irreducible_dimension((1, 1, 1)) == 1
    assert count_standard_tableaux((2, 1)) == 2
    assert irreducible_dimension((2, 1)) == 2
    with pytest.raises(ValueError):
        irreducible_dimension(())


@pytest.mark.parametrize("n", range(1, 7))
def test_hook_length_counts_standard_tableaux(n):
    for lam in partitions_of(n):
        assert irreducible_dimension(lam) == count_standard_tableaux(lam)


@pytest.mark.parametrize("n", range(1, 9))
def test_sum_of_squares_is_group_order(n):
    assert sum(irreducible_dimension(lam) ** 2 for lam in partitions_of(n)) == factorial(n)
