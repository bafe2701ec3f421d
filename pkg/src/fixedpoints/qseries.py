"""Truncated power series in q with exact integer coefficients.

Binary operations on series of different orders truncate to the smaller
order; nothing ever silently gains precision.

Convention: 1/(q;q)_m is the zero series for m < 0, so terms of a
generating-function sum whose Pochhammer index goes negative vanish.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence


class TruncatedSeries:
    """c0 + c1 q + ... + cN q^N, coefficients are Python ints."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        coeffs = tuple(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return series_add(self, other)

    def __sub__(self, other):
        return series_sub(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __neg__(self):
        return TruncatedSeries(-c for c in self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, {format_series(self)})"

    def __str__(self) -> str:
        return format_series(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, items: Sequence[str]) -> TruncatedSeries:
        return cls(int(s) for s in items)


def series_zero(order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    return TruncatedSeries([0] * (order + 1))


def series_one(order: int) -> TruncatedSeries:
    return series_monomial(0, order)


def series_monomial(e: int, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be nonnegative")
    if not 0 <= e <= order:
        raise ValueError(f"exponent {e} outside 0..{order}")
    c = [0] * (order + 1)
    c[e] = 1
    return TruncatedSeries(c)


def coefficient(s: TruncatedSeries, n: int) -> int:
    if not 0 <= n <= s.order:
        raise IndexError(f"coefficient q^{n} outside 0..{s.order}")
    return s.coeffs[n]


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(x + y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1]))


def series_sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(x - y for x, y in zip(a.coeffs[: n + 1], b.coeffs[: n + 1]))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i in range(n + 1):
        x = ac[i]
        if x == 0:
            continue
        for j in range(n + 1 - i):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(out)


def shift(s: TruncatedSeries, e: int) -> TruncatedSeries:
    """q^e * s at the same order."""
    if e < 0:
        raise ValueError("negative shifts leave the power-series ring")
    n = s.order
    if e > n:
        return series_zero(n)
    return TruncatedSeries((0,) * e + s.coeffs[: n + 1 - e])


def _times_geometric(c: list[int], t: int) -> None:
    # In place: c <- c / (1 - q^t).
    for m in range(t, len(c)):
        c[m] += c[m - t]


@lru_cache(maxsize=None)
def inv_pochhammer(m: int, order: int) -> TruncatedSeries:
    """1/(q;q)_m = prod_{t=1..m} 1/(1 - q^t) up to q^order; zero for m < 0."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    if m < 0:
        return series_zero(order)
    c = [1] + [0] * order
    # Factors with t > order are 1 modulo q^(order+1).
    for t in range(1, min(m, order) + 1):
        _times_geometric(c, t)
    return TruncatedSeries(c)


def rational_term(e: int, a: int, b: int, order: int) -> TruncatedSeries:
    """q^e / ((q;q)_a (q;q)_b) truncated at ``order``."""
    if a < 0 or b < 0 or e > order:
        return series_zero(order)
    if e < 0:
        raise ValueError("negative exponent")
    rest = order - e
    lo, hi = sorted((a, b))
    c = list(inv_pochhammer(hi, rest).coeffs)
    for t in range(1, min(lo, rest) + 1):
        _times_geometric(c, t)
    return shift(TruncatedSeries(c + [0] * e), e)


def _quadratic_sum(order: int, start: int, term) -> TruncatedSeries:
    # term(i) -> (exponent, a, b); every caller's exponent increases with i
    # from ``start`` on, so the first exponent past ``order`` ends the sum.
    total = [0] * (order + 1)
    i = start
    while True:
        e, a, b = term(i)
        if e > order:
            break
        for n, c in enumerate(rational_term(e, a, b, order).coeffs):
            total[n] += c
        i += 1
    return TruncatedSeries(total)


def gf_fixed(k: int, order: int) -> TruncatedSeries:
    """sum_{n} f_k(n) q^n = sum_{i>=1} q^{i(i+k)} / ((q;q)_{i+k} (q;q)_{i-1})."""
    if k < 0:
        raise ValueError("use gf_neg_fixed for negative parameters")
    return _quadratic_sum(order, 1, lambda i: (i * (i + k), i + k, i - 1))


def gf_all(k: int, order: int) -> TruncatedSeries:
    """Partition generating function split by k-Durfee rectangle."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _quadratic_sum(order, 0, lambda i: (i * (i + k), i + k, i))


def gf_unfixed(k: int, order: int) -> TruncatedSeries:
    """sum_{n} g_k(n) q^n = sum_{i>=0} q^{i^2+ik+i} / ((q;q)_{i+k} (q;q)_i)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _quadratic_sum(order, 0, lambda i: (i * i + i * k + i, i + k, i))


def gf_neg_fixed(k: int, order: int) -> TruncatedSeries:
    """sum_{n} f_{-k}(n) q^n = sum_{i>=k+1} q^{i(i-k)} / ((q;q)_{i-k} (q;q)_{i-1})."""
    if k < 1:
        raise ValueError("k must be positive")
    return _quadratic_sum(order, k + 1, lambda i: (i * (i - k), i - k, i - 1))


def gf_crank_tail(j: int, order: int) -> TruncatedSeries:
    """sum_{i>=0} q^{(i+1)(i+j)} / ((q;q)_i (q;q)_{i+j}).

    For n >= 2 the coefficient of q^n is the number of partitions of n with
    crank >= j. Terms with i + j < 0 vanish.
    """
    start = max(0, -j)
    return _quadratic_sum(order, start, lambda i: ((i + 1) * (i + j), i, i + j))


def format_series(s: TruncatedSeries) -> str:
    """``c0 + c1*q + c2*q^2 + ...`` listing nonzero terms only."""
    out = []
    for n, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if n == 0:
            body = str(mag)
        else:
            mono = "q" if n == 1 else f"q^{n}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"
