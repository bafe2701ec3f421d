import pytest
from hypothesis import strategies as st

from fixedpoints.partitions import Partition


def _brute_partitions(n, largest=None):
    # Independent of the ZS1 enumerator: plain recursion over the largest part.
    if largest is None:
        largest = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _brute_partitions(n - first, first):
            out.append((first,) + rest)
    return out


@pytest.fixture(scope="session")
def brute_partitions():
    return _brute_partitions


partitions_st = st.lists(st.integers(min_value=1, max_value=25), max_size=14).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
