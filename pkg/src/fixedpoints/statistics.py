"""Per-partition statistics: Durfee shapes, Frobenius symbols, crank, mex_j and k-fixed points."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .partitions import Partition, conjugate


class UndefinedStatisticError(ValueError):
    """The statistic has no value on this partition (e.g. crank of the empty partition)."""


def durfee_side(p: Sequence[int]) -> int:
    """Side of the Durfee square, #{i : parts[i] >= i}."""
    return durfee_rect_rows(p, 0)


def durfee_rect_rows(p: Sequence[int], j: int) -> int:
    """Rows of the j-Durfee rectangle, #{i : parts[i] >= i + j}.

    ``j`` may be negative. The rectangle has this many rows and ``rows + j``
    columns.
    """
    rows = 0
    for i, part in enumerate(p, start=1):
        if part >= i + j:
            rows = i
        else:
            break
    return rows


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Two equal-length strictly decreasing rows of nonnegative integers.

    ``top[i]`` counts dots right of the Durfee diagonal in row i, ``bottom[i]``
    dots below it in column i.
    """

    top: tuple[int, ...] = ()
    bottom: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError(
                f"rows differ in length: {len(self.top)} vs {len(self.bottom)}"
            )
        for name, row in (("top", self.top), ("bottom", self.bottom)):
            if any(x < 0 for x in row):
                raise ValueError(f"{name} row has a negative entry")
            if any(a <= b for a, b in zip(row, row[1:])):
                raise ValueError(f"{name} row is not strictly decreasing")

    @property
    def rank(self) -> int:
        return len(self.top)

    @property
    def weight(self) -> int:
        return len(self.top) + sum(self.top) + sum(self.bottom)

    def __str__(self) -> str:
        return f"{','.join(map(str, self.top))}/{','.join(map(str, self.bottom))}"

    @classmethod
    def parse(cls, text: str) -> FrobeniusSymbol:
        """Inverse of ``str``: ``"4,1,0/4,2,1"``."""
        if text.count("/") != 1:
            raise ValueError(f"expected exactly one '/' in {text!r}")
        top, bottom = text.split("/")

        def row(s: str) -> tuple[int, ...]:
            s = s.strip()
            return tuple(int(t) for t in s.split(",")) if s else ()

        return cls(row(top), row(bottom))


def frobenius_symbol(p: Sequence[int]) -> FrobeniusSymbol:
    # The bottom row is read off the conjugate so that conjugation and this
    # construction check each other.
    d = durfee_side(p)
    cols = conjugate(p)
    top = tuple(p[i] - (i + 1) for i in range(d))
    bottom = tuple(cols[i] - (i + 1) for i in range(d))
    return FrobeniusSymbol(top, bottom)


def partition_from_frobenius(f: FrobeniusSymbol) -> Partition:
    """The unique partition whose Frobenius symbol is ``f``."""
    d = f.rank
    rows = [a + i for i, a in enumerate(f.top, start=1)]
    col_len = [b + i for i, b in enumerate(f.bottom, start=1)]
    r = d + 1
    while True:
        # Row r > d holds one dot for each diagonal column reaching that deep.
        width = sum(1 for c in col_len if c >= r)
        if width == 0:
            break
        rows.append(width)
        r += 1
    return Partition(rows)


def crank(p: Sequence[int]) -> int:
    """Dyson's crank as defined by Andrews and Garvan.

    With w the number of ones: the largest part if w == 0, otherwise the
    number of parts larger than w minus w.
    """
    if not p:
        raise UndefinedStatisticError("crank is undefined on the empty partition")
    ones = 0
    for part in reversed(p):
        if part != 1:
            break
        ones += 1
    if ones == 0:
        return p[0]
    larger = 0
    for part in p:
        if part <= ones:
            break
        larger += 1
    return larger - ones


def mex_j(p: Sequence[int], j: int = 0) -> int:
    """Smallest integer greater than ``j`` that is not a part of ``p``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    present = set(p)
    m = j + 1
    while m in present:
        m += 1
    return m


def mex(p: Sequence[int]) -> int:
    return mex_j(p, 0)


@dataclass(frozen=True)
class FixedPointResult:
    found: bool
    index: Optional[int] = None

    def __post_init__(self):
        if self.found != (self.index is not None):
            raise ValueError("index must be given exactly when found")
        if self.index is not None and self.index < 1:
            raise ValueError("index is 1-based")

    def __bool__(self) -> bool:
        return self.found


_NOT_FOUND = FixedPointResult(False)


def find_fixed_point(p: Sequence[int], k: int = 0) -> FixedPointResult:
    """Locate the index i with parts[i] == i + k, if any.

    Implicit trailing zero parts never count, so for k <= -1 a witness needs
    at least 1 - k parts.
    """
    # parts[i] - i strictly decreases, so the first index where it drops
    # below k ends the search and a second match is impossible.
    start = max(1, 1 - k)
    for i in range(start, len(p) + 1):
        diff = p[i - 1] - i
        if diff == k:
            return FixedPointResult(True, i)
        if diff < k:
            break
    return _NOT_FOUND


def has_fixed_point(p: Sequence[int], k: int = 0) -> bool:
    return find_fixed_point(p, k).found
