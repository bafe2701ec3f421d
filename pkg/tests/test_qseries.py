import random

import pytest
import sympy

from fixedpoints.counting import count_fixed, crank_counts, partition_count
from fixedpoints.partitions import enumerate_partitions
from fixedpoints.qseries import (
    TruncatedSeries,
    coefficient,
    format_series,
    gf_all,
    gf_crank_tail,
    gf_fixed,
    gf_neg_fixed,
    gf_unfixed,
    inv_pochhammer,
    series_add,
    series_monomial,
    series_mul,
    series_one,
    series_sub,
    series_zero,
)
from fixedpoints.statistics import find_fixed_point

N = 60


def _tail(n, j):
    return sum(c for m, c in crank_counts(n).items() if m >= j)


def test_constructors():
    assert series_one(3).coeffs == (1, 0, 0, 0)
    assert series_monomial(2, 3).coeffs == (0, 0, 1, 0)
    assert series_zero(0).coeffs == (0,)
    with pytest.raises(ValueError):
        series_monomial(4, 3)


def test_coefficient_access():
    assert coefficient(series_one(5), 0) == 1
    assert coefficient(series_monomial(3, 5), 3) == 1
    with pytest.raises(IndexError):
        coefficient(series_one(5), 6)
    assert coefficient(gf_all(0, 10), 10) == 42


def test_arithmetic_basics():
    geom = TruncatedSeries([1, 1, 1, 1])
    one_minus_q = TruncatedSeries([1, -1, 0, 0])
    assert series_mul(one_minus_q, geom) == series_one(3)
    a = TruncatedSeries([3, -1, 4, 1])
    assert series_add(a, series_zero(3)) == a
    assert series_sub(a, a) == series_zero(3)
    assert (a + a - a) == a


def test_mixed_orders_truncate_to_min():
    a = TruncatedSeries([1, 2, 3, 4, 5])
    b = TruncatedSeries([1, 1])
    assert (a + b).order == 1
    assert (a * b).coeffs == (1, 3)


def test_mul_against_sympy_oracle():
    rng = random.Random(20261015)
    q = sympy.Symbol("q")
    for _ in range(100):
        order = rng.randint(0, 64)
        a = [rng.randint(-10**12, 10**12) for _ in range(order + 1)]
        b = [rng.randint(-50, 50) for _ in range(order + 1)]
        prod = sympy.Poly(list(reversed(a)), q) * sympy.Poly(list(reversed(b)), q)
        full = list(reversed(prod.all_coeffs())) if not prod.is_zero else [0]
        full += [0] * (order + 1)
        expected = tuple(int(x) for x in full[: order + 1])
        assert series_mul(TruncatedSeries(a), TruncatedSeries(b)).coeffs == expected


def test_inv_pochhammer():
    assert inv_pochhammer(0, 5) == series_one(5)
    assert inv_pochhammer(2, 4).coeffs == (1, 1, 2, 2, 3)
    assert inv_pochhammer(-3, 4) == series_zero(4)
    # m beyond the order is the full partition function
    assert inv_pochhammer(50, 10).coeffs == tuple(partition_count(n) for n in range(11))


def test_inv_pochhammer_counts_bounded_parts():
    for m in range(7):
        s = inv_pochhammer(m, 20)
        for n in range(21):
            assert s[n] == sum(1 for p in enumerate_partitions(n) if not p or p[0] <= m)


def test_gf_fixed_examples():
    s = gf_fixed(0, 10)
    assert s[2] == 1 and s[4] == 2
    for k in range(5):
        assert gf_fixed(k, 10)[0] == 0


def test_gf_fixed_matches_enumeration():
    for k in range(7):
        s = gf_fixed(k, 30)
        for n in range(31):
            assert s[n] == count_fixed(n, k)


def test_gf_all_is_partition_function_for_every_k():
    target = tuple(partition_count(n) for n in range(N + 1))
    for k in range(7):
        assert gf_all(k, N).coeffs == target
    assert gf_all(0, 4)[4] == 5 and gf_all(2, 4)[4] == 5 and gf_all(3, 4)[0] == 1


def test_gf_unfixed_examples_and_complement():
    s = gf_unfixed(0, 5)
    assert s[2] == 1 and s[3] == 2 and s[0] == 1
    for k in range(7):
        assert series_add(gf_fixed(k, N), gf_unfixed(k, N)) == gf_all(k, N)


def test_gf_neg_fixed():
    for k in range(1, 6):
        s = gf_neg_fixed(k, 25)
        for n in range(26):
            brute = sum(1 for p in enumerate_partitions(n) if find_fixed_point(p, -k).found)
            assert s[n] == brute
            if n < k + 1:
                assert s[n] == 0
    assert gf_neg_fixed(1, 3)[3] == 2


def test_gf_crank_tail_examples():
    assert gf_crank_tail(0, 10)[4] == 3
    assert gf_crank_tail(1, 10)[4] == 2
    assert gf_crank_tail(-4, 10)[4] == 5
    assert gf_crank_tail(5, 10)[4] == 0
    deep = gf_crank_tail(-20, 20)
    for n in range(2, 21):
        assert deep[n] == partition_count(n)


def test_gf_crank_tail_against_enumeration():
    for j in range(-5, 6):
        s = gf_crank_tail(j, 35)
        for n in range(2, 36):
            assert s[n] == _tail(n, j)


def test_gf_crank_tail_monotone_in_j():
    series = {j: gf_crank_tail(j, 35) for j in range(-6, 7)}
    for n in range(2, 36):
        values = [series[j][n] for j in range(-6, 7)]
        assert values == sorted(values, reverse=True)


def test_gf_crank_tail_weight_shift():
    for k in range(6):
        left = gf_crank_tail(-k, 35)
        right = gf_crank_tail(k, 35 + k)
        for n in range(2, 36):
            assert left[n] == right[n + k]


def test_format_and_json():
    s = TruncatedSeries([1, -2, 0, 1])
    assert format_series(s) == "1 - 2*q + q^3"
    assert format_series(series_zero(3)) == "0"
    assert format_series(TruncatedSeries([0, -1])) == "-q"
    assert TruncatedSeries.from_json(s.to_json()) == s
    big = TruncatedSeries([10**30])
    assert big.to_json() == ["1" + "0" * 30]
