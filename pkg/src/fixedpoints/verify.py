"""Identity harness: checks each equality cell by cell and collects reports.

Counts on the partition side come from exhaustive enumeration
(:func:`fixedpoints.counting.census`); the crank generating function is
expanded independently in :mod:`fixedpoints.qseries`. Checks start at n = 2.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Optional

from . import counting
from .counting import census, partition_count, partition_count_max_parts
from .partitions import enumerate_partitions, format_partition
from .qseries import coefficient, gf_crank_tail, series_sub
from .statistics import crank, find_fixed_point, frobenius_symbol, mex_j

MAX_WITNESSES = 5


@dataclass
class Cell:
    params: dict
    lhs: int
    rhs: int
    witnesses: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "pass": self.passed,
            "witnesses": self.witnesses,
        }


@dataclass
class VerificationReport:
    identity_id: str
    cells: list[Cell] = field(default_factory=list)
    findings: dict = field(default_factory=dict)
    duration: float = 0.0

    def check(self, params: dict, lhs: int, rhs: int,
              witness: Optional[Callable[[], list[str]]] = None) -> Cell:
        cell = Cell(params, lhs, rhs)
        if not cell.passed and witness is not None:
            cell.witnesses = witness()[:MAX_WITNESSES]
        self.cells.append(cell)
        return cell

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        failed = len(self.failures)
        return {"cells": len(self.cells), "passed": len(self.cells) - failed, "failed": failed}

    def to_dict(self) -> dict:
        # Wall-clock time is left out so repeated runs serialise identically.
        return {
            "identity_id": self.identity_id,
            "summary": self.summary(),
            "findings": self.findings,
            "cells": [c.to_dict() for c in self.cells],
        }

    def render_text(self) -> str:
        s = self.summary()
        status = "PASS" if self.ok else "FAIL"
        lines = [
            f"{status} {self.identity_id}: {s['cells']} cells, "
            f"{s['passed']} passed, {s['failed']} failed ({self.duration:.2f} s)"
        ]
        for key, value in self.findings.items():
            lines.append(f"  {key}: {value}")
        for cell in self.failures:
            params = " ".join(f"{k}={v}" for k, v in cell.params.items())
            lines.append(f"  mismatch {params}: lhs={cell.lhs} rhs={cell.rhs}")
            for w in cell.witnesses:
                lines.append(f"    witness ({w})")
        return "\n".join(lines)


class _timed:
    def __init__(self, report: VerificationReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.duration = time.perf_counter() - self.t0
        return False


def _disagreements(n: int, a: Callable, b: Callable) -> Callable[[], list[str]]:
    """Witness finder: partitions of n on which predicates ``a`` and ``b`` differ."""

    def find() -> list[str]:
        out = []
        for p in enumerate_partitions(n):
            if bool(a(p)) != bool(b(p)):
                out.append(format_partition(p))
                if len(out) == MAX_WITNESSES:
                    break
        return out

    return find


def _fixed(k):
    return lambda p: find_fixed_point(p, k).found


def _frob_has(k):
    return lambda p: k in frobenius_symbol(p).top


def _mex_even(k):
    return lambda p: (mex_j(p, k) - k) % 2 == 0


def _crank_ge(lo):
    return lambda p: crank(p) >= lo


def _not(pred):
    return lambda p: not pred(p)


def verify_theorem5(n_max: int = 40) -> VerificationReport:
    """Fixed points vs. Frobenius zero, mex parity and crank tails, 2 <= n <= n_max."""
    report = VerificationReport("thm5")
    with _timed(report):
        for n in range(2, n_max + 1):
            c = census(n, 0)
            f = c.fixed[0]
            g = c.total - f
            fp, fr, me, cr = _fixed(0), _frob_has(0), _mex_even(0), _crank_ge(1)
            report.check({"n": n, "pair": "i=ii"}, f, c.frobenius_top[0], _disagreements(n, fp, fr))
            report.check({"n": n, "pair": "i=iii"}, f, c.mex_even[0], _disagreements(n, fp, me))
            report.check({"n": n, "pair": "i=iv"}, f, c.crank_at_least(1), _disagreements(n, fp, cr))
            nf = _not(fp)
            report.check({"n": n, "pair": "v=vi"}, g, c.total - c.frobenius_top[0],
                         _disagreements(n, nf, _not(fr)))
            report.check({"n": n, "pair": "v=vii"}, g, c.total - c.mex_even[0],
                         _disagreements(n, nf, _not(me)))
            report.check({"n": n, "pair": "v=viii"}, g, c.crank_at_least(0),
                         _disagreements(n, nf, _crank_ge(0)))
    return report


def verify_theorem7(k_max: int = 6, n_max: int = 40) -> VerificationReport:
    """k-fixed points for 0 <= k <= k_max, including the shift to weight n + k."""
    report = VerificationReport("thm7")
    with _timed(report):
        for k in range(0, k_max + 1):
            for n in range(2, n_max + 1):
                c = census(n, k_max)
                f = c.fixed[k]
                g = c.total - f
                fp = _fixed(k)
                nf = _not(fp)
                base = {"k": k, "n": n}
                report.check({**base, "pair": "ix=x"}, f, c.frobenius_top[k],
                             _disagreements(n, fp, _frob_has(k)))
                report.check({**base, "pair": "ix=xi"}, f, c.mex_even[k],
                             _disagreements(n, fp, _mex_even(k)))
                report.check({**base, "pair": "ix=xii"}, f, c.crank_at_least(k + 1),
                             _disagreements(n, fp, _crank_ge(k + 1)))
                report.check({**base, "pair": "xiv=xv"}, g, c.total - c.frobenius_top[k],
                             _disagreements(n, nf, _not(_frob_has(k))))
                report.check({**base, "pair": "xiv=xvi"}, g, c.total - c.mex_even[k],
                             _disagreements(n, nf, _not(_mex_even(k))))
                report.check({**base, "pair": "xiv=xvii"}, g, c.crank_at_least(-k),
                             _disagreements(n, nf, _crank_ge(-k)))
                shifted = census(n + k, k_max)
                report.check({**base, "pair": "xiv=xviii"}, g, shifted.crank_at_least(k))
    return report


def verify_theorem8(k_max: int = 6, n_max: int = 40, k_min: int = 0) -> VerificationReport:
    """-k-fixed points: the short/fixed/unfixed split against crank tails."""
    report = VerificationReport("thm8")
    with _timed(report):
        for k in range(k_min, k_max + 1):
            for n in range(2, n_max + 1):
                c = census(n, k_max)
                base = {"k": k, "n": n}
                if k == 0:
                    fixed, short, unfixed = c.fixed[0], 0, c.total - c.fixed[0]
                    short_rec = 0
                else:
                    fixed, short, unfixed = c.fixed[-k], c.short[k], c.unfixed_neg[k]
                    short_rec = partition_count_max_parts(n, k - 1)
                report.check({**base, "claim": "short=p(n,k-1)"}, short, short_rec)
                report.check({**base, "claim": "trichotomy"}, fixed + short + unfixed,
                             partition_count(n))
                report.check({**base, "claim": "xviii"}, fixed + short_rec,
                             c.crank_at_least(-k + 1))
                unfixed_pred = lambda p, k=k: len(p) >= k and not find_fixed_point(p, -k).found
                report.check({**base, "claim": "xix"}, unfixed, c.crank_at_least(k),
                             _disagreements(n, unfixed_pred, _crank_ge(k)))
    return report


def verify_hss2(j_max: int = 5, n_max: int = 40) -> VerificationReport:
    """Crank tails vs. mex_j parity, on partitions of n - j and on those of n containing j."""
    report = VerificationReport("hss2")
    with _timed(report):
        for j in range(0, j_max + 1):
            for n in range(2, n_max + 1):
                tail = census(n, j_max).crank_at_least(j)
                if n - j >= 0:
                    small = census(n - j, j_max)
                    odd = small.total - small.mex_even[j]
                else:
                    odd = 0
                report.check({"j": j, "n": n, "form": "remove-part"}, tail, odd)
                if j >= 1:
                    report.check({"j": j, "n": n, "form": "with-part"}, tail,
                                 census(n, j_max).mex_odd_with_part[j])
    return report


def verify_hsy8(j_lo: int = -5, j_hi: int = 5, n_max: int = 35,
                order: int = 100) -> VerificationReport:
    """Crank-tail generating function coefficients vs. enumerated crank histograms."""
    report = VerificationReport("hsy8")
    order = max(order, n_max)
    with _timed(report):
        for j in range(j_lo, j_hi + 1):
            series = gf_crank_tail(j, order)
            for n in range(2, n_max + 1):
                brute = census(n, 0).crank_at_least(j)
                report.check({"j": j, "n": n}, coefficient(series, n), brute)
    return report


def load_table1() -> dict[tuple[int, int], int]:
    """Golden Table 1 values keyed by (k, n)."""
    text = resources.files("fixedpoints").joinpath("data/table1.csv").read_text()
    rows = list(csv.reader(io.StringIO(text)))
    ns = [int(x) for x in rows[0][1:]]
    table = {}
    for row in rows[1:]:
        k = int(row[0])
        for n, v in zip(ns, row[1:]):
            table[k, n] = int(v)
    return table


def reproduce_table1() -> VerificationReport:
    """#{partitions of n with -k <= crank <= k}, 0 <= k <= 5, 2 <= n <= 15."""
    report = VerificationReport("table1")
    golden = load_table1()
    with _timed(report):
        for (k, n), value in sorted(golden.items()):
            report.check({"k": k, "n": n}, counting.crank_range_count(n, -k, k), value)
        for n in sorted({n for _, n in golden}):
            report.check({"k": 0, "n": n, "claim": "M(0,n)"},
                         counting.crank_counts(n).get(0, 0), golden[0, n])
    return report


# Printed offset d of each pentagonal shift: c = d for cor6, c = 2k + d otherwise.
_PRINTED_OFFSETS = {"cor6": 1, "cor9": -1, "cor11": -3}


def _pentagonal_shift(family: str, k: int, delta: int) -> int:
    return delta if family == "cor6" else 2 * k + delta


def _shift_label(family: str, delta: int) -> str:
    if family == "cor6":
        return f"j(j{delta:+d})/2"
    return f"j(j+2k{delta:+d})/2"


def verify_corollaries(k_max: int = 6, n_max: int = 40, series_n_max: int = 200,
                       shift_window: int = 4) -> VerificationReport:
    """Crank-range differences, the g > f inequality, and a sweep for the pentagonal shift."""
    report = VerificationReport("corollaries")
    with _timed(report):
        crank_sums: dict[str, dict[tuple[int, int], int]] = {"cor6": {}, "cor9": {}, "cor11": {}}
        for n in range(2, n_max + 1):
            c = census(n, k_max)
            f, g = c.fixed[0], c.total - c.fixed[0]
            m0 = c.cranks.get(0, 0)
            crank_sums["cor6"][0, n] = m0
            report.check({"cor": 6, "n": n}, g - f, m0)
            if n == 2:
                report.check({"claim": "g=f", "n": n}, g, f)
            else:
                report.check({"claim": "g>f", "n": n}, int(g > f), 1)
            for k in range(0, k_max + 1):
                rng = c.crank_between(-k, k)
                crank_sums["cor9"][k, n] = rng
                report.check({"cor": 9, "k": k, "n": n}, (c.total - c.fixed[k]) - c.fixed[k], rng)
            for k in range(1, k_max + 1):
                rng = c.crank_between(-k + 1, k - 1)
                crank_sums["cor11"][k, n] = rng
                lhs = c.fixed[-k] + partition_count_max_parts(n, k - 1) - c.unfixed_neg[k]
                report.check({"cor": 11, "k": k, "n": n}, lhs, rng)

        # Series route for the crank-0 count, independent of enumeration.
        order = max(series_n_max, 2)
        m0_series = series_sub(gf_crank_tail(0, order), gf_crank_tail(1, order))
        for n in range(2, series_n_max + 1):
            m0 = coefficient(m0_series, n)
            report.check({"cor": 6, "n": n, "route": "series"}, m0,
                         counting.pentagonal_alternating_sum(n, 1))
            if n >= 3:
                report.check({"claim": "g>f", "n": n, "route": "series"}, int(m0 > 0), 1)

        for family, printed in _PRINTED_OFFSETS.items():
            cells = crank_sums[family]
            candidates = range(printed - shift_window, printed + shift_window + 1, 2)
            consistent = [
                d for d in candidates
                if all(counting.pentagonal_alternating_sum(n, _pentagonal_shift(family, k, d)) == v
                       for (k, n), v in cells.items())
            ]
            printed_misses = sum(
                1 for (k, n), v in cells.items()
                if counting.pentagonal_alternating_sum(n, _pentagonal_shift(family, k, printed)) != v
            )
            report.findings[family] = {
                "printed_shift": _shift_label(family, printed),
                "printed_shift_mismatches": printed_misses,
                "consistent_shifts": [_shift_label(family, d) for d in consistent],
                "cells_tested": len(cells),
            }
            report.check({"claim": "unique-shift", "family": family}, len(consistent), 1)
            if len(consistent) == 1:
                d = consistent[0]
                for (k, n), v in sorted(cells.items()):
                    params = {"family": family, "k": k, "n": n, "shift": _shift_label(family, d)}
                    report.check(params, counting.pentagonal_alternating_sum(
                        n, _pentagonal_shift(family, k, d)), v)
    return report


def verify_curious_identity(k_max: int = 6, n_max: int = 40) -> VerificationReport:
    """g_{k-1} - f_{k-1} against f_{-k} + p(n, k-1) - g'_{-k}, all by enumeration."""
    report = VerificationReport("curious")
    with _timed(report):
        for k in range(1, k_max + 1):
            for n in range(2, n_max + 1):
                c = census(n, k_max)
                lhs = c.total - 2 * c.fixed[k - 1]
                rhs = c.fixed[-k] + c.short[k] - c.unfixed_neg[k]
                report.check({"k": k, "n": n}, lhs, rhs)
    return report


SUITES = ("table1", "thm5", "thm7", "thm8", "hss2", "hsy8", "corollaries", "curious")


@dataclass
class Ranges:
    n_max: int = 40
    k_max: int = 6
    j_min: int = -5
    j_max: int = 5
    order: int = 100
    series_n_max: int = 200
    parallel: int = 1


def run_suite(name: str, r: Ranges) -> list[VerificationReport]:
    """Run one named suite, or every suite for ``"all"``."""
    names = SUITES if name == "all" else (name,)
    for nm in names:
        if nm not in SUITES:
            raise ValueError(f"unknown suite {nm!r}")
    k_census = max(r.k_max, r.j_max, 0)
    counting.warm_census(range(0, r.n_max + k_census + 1), k_census, r.parallel)
    out = []
    for nm in names:
        if nm == "table1":
            out.append(reproduce_table1())
        elif nm == "thm5":
            out.append(verify_theorem5(r.n_max))
        elif nm == "thm7":
            out.append(verify_theorem7(r.k_max, r.n_max))
        elif nm == "thm8":
            out.append(verify_theorem8(r.k_max, r.n_max))
        elif nm == "hss2":
            out.append(verify_hss2(max(r.j_max, 0), r.n_max))
        elif nm == "hsy8":
            out.append(verify_hsy8(r.j_min, r.j_max, r.n_max, r.order))
        elif nm == "corollaries":
            out.append(verify_corollaries(max(r.k_max, 1), r.n_max, r.series_n_max))
        elif nm == "curious":
            out.append(verify_curious_identity(max(r.k_max, 1), r.n_max))
    return out
