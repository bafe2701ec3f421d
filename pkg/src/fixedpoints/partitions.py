"""Partition representation, text parsing, conjugation and enumeration.

All index-based statements in this package are 1-based: ``parts[i]`` in a
docstring means the i-th largest part, stored at Python index ``i - 1``.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Iterator


class PartitionParseError(ValueError):
    """Raised when partition text cannot be parsed.

    ``position`` is the 1-based index of the offending token.
    """

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (position {position})")
        self.position = position


class InvalidTokenError(PartitionParseError):
    pass


class NonPositivePartError(PartitionParseError):
    pass


class IncreasingPartsError(PartitionParseError):
    pass


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    The empty tuple is the unique partition of 0.

    >>> Partition((5, 3, 3, 3, 1)).weight
    15
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        for pos, part in enumerate(parts, start=1):
            if not isinstance(part, int) or isinstance(part, bool):
                raise TypeError(f"part {part!r} at position {pos} is not an integer")
            if part < 1:
                raise ValueError(f"part {part} at position {pos} is not positive")
            if pos > 1 and part > parts[pos - 2]:
                raise ValueError(f"parts increase at position {pos}")
        return tuple.__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts: Iterable[int]) -> Partition:
        # Skips validation; only for generators that guarantee the invariants.
        return tuple.__new__(cls, parts)

    @cached_property
    def weight(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({', '.join(map(str, self))})"

    def __str__(self) -> str:
        return format_partition(self)


def format_partition(parts: Iterable[int]) -> str:
    """Render parts in the canonical comma-separated text format."""
    return ",".join(str(x) for x in parts)


def parse_partition(text: str) -> Partition:
    """Parse ``"5,3,3,3,1"`` style text. The empty string is the empty partition.

    Whitespace around tokens is ignored. Parts must already be nonincreasing.
    """
    if text.strip() == "":
        return Partition()
    parts: list[int] = []
    for pos, token in enumerate(text.split(","), start=1):
        token = token.strip()
        try:
            value = int(token, 10)
        except ValueError:
            raise InvalidTokenError(f"not a base-10 integer: {token!r}", pos) from None
        if value < 1:
            raise NonPositivePartError(f"part must be positive, got {value}", pos)
        if parts and value > parts[-1]:
            raise IncreasingPartsError(
                f"part {value} exceeds preceding part {parts[-1]}", pos
            )
        parts.append(value)
    return Partition._trusted(parts)


def conjugate(p: Iterable[int]) -> Partition:
    """Transpose of the Ferrers diagram: column lengths, left to right."""
    p = tuple(p)
    if not p:
        return Partition()
    cols = []
    length = len(p)
    # p is nonincreasing: column c has as many dots as parts >= c.
    for c in range(1, p[0] + 1):
        while p[length - 1] < c:
            length -= 1
        cols.append(length)
    return Partition._trusted(cols)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    (4), (3,1), (2,2), (2,1,1), (1,1,1,1) for n = 4. Uses the ZS1 scheme of
    Zoghbi and Stojmenovic. The stream has p(n) items, so p(60) is already
    close to a million.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition()
        return
    x = [1] * n
    x[0] = n
    m = 1  # number of parts
    h = 1  # 1-based index of the last part > 1
    yield Partition._trusted(x[:1])
    while x[0] != 1:
        if x[h - 1] == 2:
            m += 1
            x[h - 1] = 1
            h -= 1
        else:
            r = x[h - 1] - 1
            t = m - h + 1
            x[h - 1] = r
            while t >= r:
                h += 1
                x[h - 1] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h - 1] = t
        yield Partition._trusted(x[:m])


def enumerate_partitions_max_parts(n: int, k: int) -> Iterator[Partition]:
    """Yield the partitions of ``n`` with at most ``k`` parts, reverse-lexicographically."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")

    def descend(remaining: int, largest: int, slots: int, prefix: list[int]):
        if remaining == 0:
            yield Partition._trusted(prefix)
            return
        if slots == 0:
            return
        # The first part must be at least ceil(remaining / slots).
        lowest = -(-remaining // slots)
        for part in range(min(largest, remaining), lowest - 1, -1):
            prefix.append(part)
            yield from descend(remaining - part, part, slots - 1, prefix)
            prefix.pop()

    yield from descend(n, n, k, [])
