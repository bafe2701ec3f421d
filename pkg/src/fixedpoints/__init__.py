"""Fixed points of integer partitions and their links to Frobenius symbols, mex_j and the crank."""

from .partitions import (
    Partition,
    PartitionParseError,
    conjugate,
    enumerate_partitions,
    enumerate_partitions_max_parts,
    format_partition,
    parse_partition,
)
from .statistics import (
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
from .counting import (
    CrankTable,
    Trichotomy,
    count_fixed,
    count_unfixed,
    crank_counts,
    crank_range_count,
    crank_table,
    negative_trichotomy,
    partition_count,
    partition_count_max_parts,
    pentagonal_alternating_sum,
)
from .qseries import (
    TruncatedSeries,
    coefficient,
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

__version__ = "0.1.0"
