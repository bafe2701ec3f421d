"""Aggregate counts over all partitions of n.

Recurrence-backed counts (p(n), p(n, k)) live next to enumeration-backed
ones (crank histograms, fixed-point counts) so the two can be played off
against each other.
"""

from __future__ import annotations

import csv
import io
import threading
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

from .partitions import enumerate_partitions
from .statistics import crank, find_fixed_point, frobenius_symbol, mex_j

_p_cache = [1]
_p_lock = threading.Lock()


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence, memoised for the process."""
    if n < 0:
        return 0
    if n < len(_p_cache):
        return _p_cache[n]
    with _p_lock:
        cache = _p_cache
        for m in range(len(cache), n + 1):
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > m:
                    break
                sign = 1 if j % 2 else -1
                total += sign * cache[m - g1]
                g2 = g1 + j  # j(3j+1)/2
                if g2 <= m:
                    total += sign * cache[m - g2]
                j += 1
            cache.append(total)
    return _p_cache[n]


@lru_cache(maxsize=None)
def _bounded_part_counts(k: int, n: int) -> tuple[int, ...]:
    # Coefficients of 1/(q;q)_k up to q^n: partitions into parts <= k,
    # equinumerous with partitions into at most k parts by conjugation.
    c = [1] + [0] * n
    for t in range(1, k + 1):
        for m in range(t, n + 1):
            c[m] += c[m - t]
    return tuple(c)


def partition_count_max_parts(n: int, k: int) -> int:
    """p(n, k), partitions of n with at most k parts."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    return _bounded_part_counts(min(k, n), n)[n]


@dataclass
class CrankTable:
    """Histogram M(m, n) over inclusive n and m ranges, stored densely."""

    n_range: tuple[int, int]
    m_range: tuple[int, int]
    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)

    def column(self, n: int) -> dict[int, int]:
        lo, hi = self.m_range
        return {m: self[m, n] for m in range(lo, hi + 1)}

    def to_csv(self) -> str:
        n_lo, n_hi = self.n_range
        m_lo, m_hi = self.m_range
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m\\n"] + list(range(n_lo, n_hi + 1)))
        for m in range(m_lo, m_hi + 1):
            w.writerow([m] + [self[m, n] for n in range(n_lo, n_hi + 1)])
        return buf.getvalue()


@lru_cache(maxsize=None)
def _crank_histogram(n: int) -> tuple[tuple[int, int], ...]:
    hist = Counter(crank(p) for p in enumerate_partitions(n))
    return tuple(sorted(hist.items()))


def crank_counts(n: int) -> dict[int, int]:
    """Exact histogram {m: M(m, n)} over all partitions of n (nonzero entries only).

    n = 1 gives {-1: 1}; the generating-function convention differs there.
    """
    if n < 1:
        raise ValueError("crank counts need n >= 1")
    return dict(_crank_histogram(n))


def crank_table(n_lo: int, n_hi: int) -> CrankTable:
    counts = {}
    for n in range(n_lo, n_hi + 1):
        for m, c in crank_counts(n).items():
            counts[m, n] = c
    return CrankTable((n_lo, n_hi), (-n_hi, n_hi), counts)


def crank_range_count(n: int, lo: int, hi: int) -> int:
    """Number of partitions of n with lo <= crank <= hi (0 for an empty range)."""
    return sum(c for m, c in crank_counts(n).items() if lo <= m <= hi)


def crank_tail_count(n: int, lo: int) -> int:
    """Number of partitions of n with crank >= lo."""
    return sum(c for m, c in crank_counts(n).items() if m >= lo)


def count_fixed(n: int, k: int = 0) -> int:
    """f_k(n): partitions of n having an index i with parts[i] == i + k."""
    return sum(1 for p in enumerate_partitions(n) if find_fixed_point(p, k).found)


def count_unfixed(n: int, k: int = 0) -> int:
    """g_k(n) = p(n) - f_k(n), for k >= 0."""
    if k < 0:
        raise ValueError("use negative_trichotomy for negative parameters")
    return partition_count(n) - count_fixed(n, k)


@dataclass(frozen=True)
class Trichotomy:
    """Split of the partitions of n with respect to -k-fixed points."""

    fixed: int  # f_{-k}(n)
    short: int  # p(n, k-1): too few parts to hold a -k-fixed point
    unfixed: int  # g'_{-k}(n)

    @property
    def total(self) -> int:
        return self.fixed + self.short + self.unfixed


def negative_trichotomy(n: int, k: int) -> Trichotomy:
    if k < 1:
        raise ValueError("k must be positive")
    fixed = short = unfixed = 0
    for p in enumerate_partitions(n):
        if len(p) < k:
            short += 1
        elif find_fixed_point(p, -k).found:
            fixed += 1
        else:
            unfixed += 1
    return Trichotomy(fixed, short, unfixed)


def pentagonal_step(j: int, c: int) -> int:
    return j * (j + c) // 2


def pentagonal_alternating_sum(n: int, c: int) -> int:
    """p(n) + 2 * sum_{j>=1} (-1)^j p(n - j(j+c)/2), dropping negative arguments.

    ``c`` must be odd so every step j(j+c)/2 is an integer.
    """
    if c % 2 == 0:
        raise ValueError(f"shift {c} is even; j(j+c)/2 is not integral")
    total = partition_count(n)
    j = 1
    # Steps grow once j > -c; stop when they also exceed n.
    while True:
        s = pentagonal_step(j, c)
        if s > n and j > -c:
            break
        if s <= n:
            total += 2 * (-1) ** j * partition_count(n - s)
        j += 1
    return total


@dataclass
class WeightCensus:
    """Every enumeration-backed count needed at one weight n, from a single pass.

    Indices: ``fixed[k]`` for -K <= k <= K; ``frobenius_top[k]``,
    ``mex_even[k]``, ``mex_odd_with_part[k]`` for 0 <= k <= K;
    ``short[k]`` and ``unfixed_neg[k]`` for 1 <= k <= K.
    """

    n: int
    k_max: int
    total: int = 0
    cranks: dict[int, int] = field(default_factory=dict)
    fixed: dict[int, int] = field(default_factory=dict)
    frobenius_top: dict[int, int] = field(default_factory=dict)
    mex_even: dict[int, int] = field(default_factory=dict)
    mex_odd_with_part: dict[int, int] = field(default_factory=dict)
    short: dict[int, int] = field(default_factory=dict)
    unfixed_neg: dict[int, int] = field(default_factory=dict)

    def crank_at_least(self, lo: int) -> int:
        return sum(c for m, c in self.cranks.items() if m >= lo)

    def crank_between(self, lo: int, hi: int) -> int:
        return sum(c for m, c in self.cranks.items() if lo <= m <= hi)


def _build_census(n: int, k_max: int) -> WeightCensus:
    ks = range(0, k_max + 1)
    negs = range(1, k_max + 1)
    cranks: Counter = Counter()
    fixed = Counter({k: 0 for k in range(-k_max, k_max + 1)})
    frob = Counter({k: 0 for k in ks})
    mex_even = Counter({k: 0 for k in ks})
    mex_odd_part = Counter({k: 0 for k in ks})
    short = Counter({k: 0 for k in negs})
    unfixed_neg = Counter({k: 0 for k in negs})
    total = 0
    for p in enumerate_partitions(n):
        total += 1
        if n >= 1:
            cranks[crank(p)] += 1
        top = set(frobenius_symbol(p).top)
        parts = set(p)
        for k in ks:
            if find_fixed_point(p, k).found:
                fixed[k] += 1
            if k in top:
                frob[k] += 1
            if (mex_j(p, k) - k) % 2 == 0:
                mex_even[k] += 1
            elif k in parts:
                mex_odd_part[k] += 1
        for k in negs:
            if len(p) < k:
                short[k] += 1
            elif find_fixed_point(p, -k).found:
                fixed[-k] += 1
            else:
                unfixed_neg[k] += 1
    return WeightCensus(
        n=n,
        k_max=k_max,
        total=total,
        cranks=dict(sorted(cranks.items())),
        fixed=dict(fixed),
        frobenius_top=dict(frob),
        mex_even=dict(mex_even),
        mex_odd_with_part=dict(mex_odd_part),
        short=dict(short),
        unfixed_neg=dict(unfixed_neg),
    )


_census_cache: dict[tuple[int, int], WeightCensus] = {}
_census_lock = threading.Lock()


def census(n: int, k_max: int) -> WeightCensus:
    """Cached :class:`WeightCensus`; any cached entry with a larger k_max is reused."""
    for (m, kk), c in list(_census_cache.items()):
        if m == n and kk >= k_max:
            return c
    result = _build_census(n, k_max)
    with _census_lock:
        _census_cache[n, k_max] = result
    return result


def warm_census(ns, k_max: int, workers: int = 1) -> None:
    """Fill the census cache for the weights ``ns``, optionally across processes."""
    todo = [n for n in ns if not any(m == n and kk >= k_max for m, kk in _census_cache)]
    if workers <= 1 or len(todo) < 2:
        for n in todo:
            census(n, k_max)
        return
    from concurrent.futures import ProcessPoolExecutor

    # Largest weights first: they dominate the run time.
    todo.sort(reverse=True)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for n, result in zip(todo, pool.map(_build_census, todo, [k_max] * len(todo))):
            with _census_lock:
                _census_cache[n, k_max] = result
