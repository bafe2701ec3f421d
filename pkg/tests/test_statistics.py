import pytest
from hypothesis import given

from fixedpoints.partitions import Partition, conjugate, enumerate_partitions
from fixedpoints.statistics import (
    FixedPointResult,
    FrobeniusSymbol,
    UndefinedStatisticError,
    crank,
    durfee_rect_rows,
    durfee_side,
    find_fixed_point,
    frobenius_symbol,
    mex,
    mex_j,
    partition_from_frobenius,
)

from conftest import partitions_st

ALPHA = Partition((5, 3, 3, 3, 1))
BETA = Partition((4, 4, 4, 2, 1))


def test_durfee_side():
    assert durfee_side(ALPHA) == 3
    assert durfee_side(BETA) == 3
    assert durfee_side(()) == 0


def test_durfee_rectangles():
    assert durfee_rect_rows(ALPHA, 1) == 2
    assert durfee_rect_rows(ALPHA, -2) == 4
    assert durfee_rect_rows(ALPHA, 0) == durfee_side(ALPHA)


@given(partitions_st)
def test_durfee_rect_vanishes_past_largest_part(p):
    if p:
        assert durfee_rect_rows(p, p[0]) == 0
        assert durfee_rect_rows(p, p[0] + 3) == 0


@given(partitions_st)
def test_durfee_rect_is_a_count(p):
    for j in range(-4, 5):
        assert durfee_rect_rows(p, j) == sum(1 for i, x in enumerate(p, 1) if x >= i + j)


def test_frobenius_examples():
    assert frobenius_symbol(ALPHA) == FrobeniusSymbol((4, 1, 0), (4, 2, 1))
    assert frobenius_symbol(BETA) == FrobeniusSymbol((3, 2, 1), (4, 2, 0))
    assert frobenius_symbol((1,)) == FrobeniusSymbol((0,), (0,))
    assert str(frobenius_symbol(ALPHA)) == "4,1,0/4,2,1"


def test_frobenius_inverse():
    assert partition_from_frobenius(FrobeniusSymbol((4, 1, 0), (4, 2, 1))) == ALPHA
    assert partition_from_frobenius(FrobeniusSymbol()) == ()
    assert partition_from_frobenius(FrobeniusSymbol((0,), (0,))) == (1,)


@pytest.mark.parametrize("top, bottom", [((1, 0), (0,)), ((0, 1), (1, 0)), ((2, 2), (1, 0)), ((-1,), (0,))])
def test_malformed_frobenius(top, bottom):
    with pytest.raises(ValueError):
        FrobeniusSymbol(top, bottom)


def test_frobenius_text_roundtrip():
    for s in ("4,1,0/4,2,1", "/", "0/0"):
        assert str(FrobeniusSymbol.parse(s)) == s


def test_frobenius_roundtrip_weight_and_symmetry():
    for n in range(26):
        for p in enumerate_partitions(n):
            f = frobenius_symbol(p)
            assert partition_from_frobenius(f) == p
            assert f.weight == n
            c = frobenius_symbol(conjugate(p))
            assert (c.top, c.bottom) == (f.bottom, f.top)


def test_crank_examples():
    assert crank(ALPHA) == 3
    assert crank(BETA) == 3
    assert crank((2, 2)) == 2
    assert crank((1,)) == -1


def test_crank_empty_is_error():
    with pytest.raises(UndefinedStatisticError):
        crank(())


def test_mex_examples():
    assert mex(ALPHA) == 2
    assert mex(BETA) == 3
    assert mex_j(ALPHA, 1) == 2
    assert mex_j(ALPHA, 2) == 4
    for j in range(5):
        assert mex_j((), j) == j + 1
    with pytest.raises(ValueError):
        mex_j(ALPHA, -1)


@given(partitions_st)
def test_mex_bounds(p):
    for j in range(6):
        m = mex_j(p, j)
        assert m > j
        assert m <= j + 1 + len({x for x in p if x > j})
        assert m not in p


@pytest.mark.parametrize(
    "p, k, index",
    [(ALPHA, 0, 3), (BETA, 0, None), (BETA, -2, 4), (ALPHA, 1, 2), (BETA, 1, 3), (ALPHA, -2, None),
     ((3,), -2, None)],
)
def test_fixed_point_examples(p, k, index):
    res = find_fixed_point(p, k)
    assert res.found == (index is not None)
    assert res.index == index


def test_fixed_point_result_invariants():
    with pytest.raises(ValueError):
        FixedPointResult(True)
    with pytest.raises(ValueError):
        FixedPointResult(False, 2)


def test_fixed_point_agrees_with_full_scan():
    # Full scan counts every matching index; at most one may exist.
    for n in range(21):
        for p in enumerate_partitions(n):
            for k in range(-6, 7):
                hits = [i for i, x in enumerate(p, 1) if x == i + k]
                assert len(hits) <= 1
                res = find_fixed_point(p, k)
                assert res.index == (hits[0] if hits else None)


def test_fixed_point_iff_frobenius_top_contains_k():
    for n in range(26):
        for p in enumerate_partitions(n):
            top = frobenius_symbol(p).top
            for k in range(7):
                assert find_fixed_point(p, k).found == (k in top)
