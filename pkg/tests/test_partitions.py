import pytest

from fixedpoints.counting import partition_count
from fixedpoints.partitions import (
    IncreasingPartsError,
    InvalidTokenError,
    NonPositivePartError,
    Partition,
    conjugate,
    enumerate_partitions,
    enumerate_partitions_max_parts,
    format_partition,
    parse_partition,
)


def test_parse_worked_example():
    p = parse_partition("5,3,3,3,1")
    assert p == (5, 3, 3, 3, 1)
    assert p.weight == 15


def test_parse_empty():
    p = parse_partition("")
    assert p == () and p.weight == 0


def test_parse_ignores_whitespace():
    assert parse_partition(" 4, 2 ,2 ") == (4, 2, 2)


@pytest.mark.parametrize(
    "text, exc, position",
    [
        ("3,4", IncreasingPartsError, 2),
        ("3,x", InvalidTokenError, 2),
        ("3,1.5", InvalidTokenError, 2),
        ("0", NonPositivePartError, 1),
        ("2,2,-1", NonPositivePartError, 3),
        ("2,,1", InvalidTokenError, 2),
    ],
)
def test_parse_errors_name_position(text, exc, position):
    with pytest.raises(exc) as info:
        parse_partition(text)
    assert info.value.position == position
    assert f"position {position}" in str(info.value)


def test_partition_constructor_validates():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_format_roundtrip():
    for p in enumerate_partitions(9):
        assert parse_partition(format_partition(p)) == p


@pytest.mark.parametrize(
    "p, expected",
    [((5, 3, 3, 3, 1), (5, 4, 4, 1, 1)), ((), ()), ((1, 1, 1), (3,)), ((4, 4, 4, 2, 1), (5, 4, 3, 3))],
)
def test_conjugate(p, expected):
    assert conjugate(p) == expected


def test_conjugate_involution():
    for n in range(21):
        for p in enumerate_partitions(n):
            q = conjugate(p)
            assert q.weight == n
            assert conjugate(q) == p


def test_enumerate_four_in_reverse_lex_order():
    assert list(enumerate_partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_enumerate_zero():
    assert list(enumerate_partitions(0)) == [()]


def test_enumerate_fifteen_count():
    assert sum(1 for _ in enumerate_partitions(15)) == 176


def test_enumeration_matches_brute_force(brute_partitions):
    for n in range(16):
        assert list(enumerate_partitions(n)) == brute_partitions(n)


def test_enumeration_distinct_and_counted():
    for n in range(41):
        seen = set()
        for p in enumerate_partitions(n):
            assert p.weight == n
            assert all(a >= b for a, b in zip(p, p[1:]))
            seen.add(p)
        assert len(seen) == partition_count(n)


def test_max_parts_examples():
    assert list(enumerate_partitions_max_parts(4, 2)) == [(4,), (3, 1), (2, 2)]
    assert list(enumerate_partitions_max_parts(4, 0)) == []
    assert list(enumerate_partitions_max_parts(0, 0)) == [()]


def test_max_parts_is_filter_of_full_enumeration():
    for n in range(26):
        full = list(enumerate_partitions(n))
        for k in range(9):
            assert list(enumerate_partitions_max_parts(n, k)) == [p for p in full if len(p) <= k]
