"""Exhaustive ground truth: scan every permutation of ``1..n``.

The scan records, for each realized pinnacle ordering, how many permutations
produce it.  Nothing from the slack/interruption theory is used here, so the
results can be checked against :mod:`pinnacles.core` independently.
"""

from __future__ import annotations

import csv
import itertools
import logging
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .core import (
    PinnacleError,
    PinnacleOrdering,
    PinnacleSet,
    construct_witness,
    enumerate_admissible_orderings,
    is_admissible_set,
    pinnacles_of,
)

__all__ = [
    "MAX_N",
    "OracleScan",
    "Mismatch",
    "VerificationReport",
    "VerificationError",
    "scan",
    "oracle_admissible_sets",
    "oracle_orderings",
    "verify_against_core",
    "dump_csv",
]

log = logging.getLogger(__name__)

MAX_N = 11


def _scan_block(n: int, first: int) -> Counter:
    """Pinnacle sequences of all permutations of 1..n starting with ``first``."""
    rest = [v for v in range(1, n + 1) if v != first]
    counts: Counter = Counter()
    head = (first,)
    for r in itertools.permutations(rest):
        w = head + r
        counts[tuple([b for a, b, c in zip(w, r, r[1:]) if a < b > c])] += 1
    return counts


@dataclass(frozen=True)
class OracleScan:
    """Realization counts per pinnacle set and ordering for ``S_n``.

    ``by_set`` maps each realized set to ``{ordering: count}``.  The empty set
    is present only when the scan was run with ``include_empty=True``.
    """

    n: int
    by_set: dict = field(repr=False)
    include_empty: bool = False

    def __contains__(self, s) -> bool:
        if not isinstance(s, PinnacleSet):
            s = PinnacleSet.of(s)
        return s in self.by_set

    @property
    def total(self) -> int:
        return sum(sum(d.values()) for d in self.by_set.values())

    def rows(self):
        """``(set, ordering, count)`` canonical-string rows sorted by the strings."""
        out = [
            (str(s), str(a), c)
            for s, orderings in self.by_set.items()
            for a, c in orderings.items()
        ]
        out.sort(key=lambda row: (row[0], row[1]))
        return out


def scan(n: int, include_empty: bool = False, workers: Optional[int] = None) -> OracleScan:
    """Visit all ``n!`` permutations of ``1..n`` and tally pinnacle orderings.

    Work is split into blocks by first letter.  ``workers > 1`` farms the
    blocks out to processes; the merged counts do not depend on how the blocks
    are distributed.  ``workers=None`` uses one process per CPU for
    ``n >= 10`` and runs inline otherwise.
    """
    if not isinstance(n, int) or not 1 <= n <= MAX_N:
        raise PinnacleError(f"n must be an integer in 1..{MAX_N}, got {n!r}")
    if workers is None:
        workers = (os.cpu_count() or 1) if n >= 10 else 1

    total: Counter = Counter()
    firsts = range(1, n + 1)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_block, itertools.repeat(n), firsts):
                total.update(part)
    else:
        for f in firsts:
            total.update(_scan_block(n, f))
    log.debug("scanned S_%d: %d distinct pinnacle orderings", n, len(total))

    by_set: dict = {}
    for seq, count in total.items():
        if not seq and not include_empty:
            continue
        a = PinnacleOrdering(seq)
        by_set.setdefault(a.base, {})[a] = count
    return OracleScan(n, by_set, include_empty)


def oracle_admissible_sets(result: OracleScan, include_empty: bool = False) -> frozenset:
    """Pinnacle sets realized by at least one permutation in the scan."""
    return frozenset(
        s for s in result.by_set if include_empty or len(s)
    )


def oracle_orderings(result: OracleScan, s) -> frozenset:
    """Realized orderings of ``s``.

    An unrealized ``s`` gives the empty set; use ``s in result`` to tell that
    apart from a realized set.
    """
    if not isinstance(s, PinnacleSet):
        s = PinnacleSet.of(s)
    return frozenset(a for a, c in result.by_set.get(s, {}).items() if c > 0)


@dataclass(frozen=True)
class Mismatch:
    pset: PinnacleSet
    ordering: Optional[PinnacleOrdering]
    kind: str
    detail: str

    def __str__(self) -> str:
        where = f"{{{self.pset}}}"
        if self.ordering is not None:
            where += f" ({self.ordering})"
        return f"{self.kind}: {where}: {self.detail}"


@dataclass(frozen=True)
class VerificationReport:
    n: int
    sets_checked: int
    orderings_checked: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        return (
            f"n={self.n}: {self.sets_checked} sets, {self.orderings_checked} "
            f"orderings, {len(self.mismatches)} mismatches"
        )


class VerificationError(AssertionError):
    def __init__(self, report: VerificationReport):
        self.report = report
        lines = [report.summary()] + [str(m) for m in report.mismatches[:20]]
        super().__init__("\n".join(lines))


def verify_against_core(
    n: int, result: Optional[OracleScan] = None, raise_on_mismatch: bool = False
) -> VerificationReport:
    """Cross-check the core against an exhaustive scan for sets with max ``n``.

    For every set ``S`` with ``max S == n`` it compares the realized orderings
    with ``enumerate_admissible_orderings(S)`` and checks that the witness of
    every admissible ordering reproduces it and is a realized ordering.  Sets
    the core calls admissible but the scan never realizes are reported too.
    """
    if result is None:
        result = scan(n)
    elif result.n != n:
        raise PinnacleError(f"scan is for n={result.n}, not {n}")

    mismatches = []
    sets_checked = orderings_checked = 0
    realized = {s for s in result.by_set if len(s) and s.max == n}

    candidates = set(realized)
    for size in range(0, n):
        for rest in itertools.combinations(range(1, n), size):
            s = PinnacleSet(rest + (n,))
            if is_admissible_set(s):
                candidates.add(s)

    for s in sorted(candidates):
        sets_checked += 1
        if s not in realized:
            mismatches.append(Mismatch(s, None, "core-only set", "admissible per core, never realized"))
            continue
        if not is_admissible_set(s):
            mismatches.append(Mismatch(s, None, "oracle-only set", "realized but core says inadmissible"))
            continue
        seen = oracle_orderings(result, s)
        predicted = set(enumerate_admissible_orderings(s))
        for a in sorted(seen - predicted):
            mismatches.append(Mismatch(s, a, "oracle-only ordering", "realized but rejected by core"))
        for a in sorted(predicted - seen):
            mismatches.append(Mismatch(s, a, "core-only ordering", "accepted by core, never realized"))
        for a in sorted(predicted):
            orderings_checked += 1
            w = construct_witness(a)
            if w.n != n or pinnacles_of(w) != a.sequence:
                mismatches.append(Mismatch(s, a, "bad witness", f"{w} has pinnacles {pinnacles_of(w)}"))
            elif a not in seen:
                mismatches.append(Mismatch(s, a, "bad witness", f"{w} realizes an ordering absent from the scan"))

    report = VerificationReport(n, sets_checked, orderings_checked, tuple(mismatches))
    if raise_on_mismatch and not report.ok:
        raise VerificationError(report)
    return report


def dump_csv(result: OracleScan, path) -> int:
    """Write ``set,ordering,count`` rows, sorted by the canonical strings; returns the row count."""
    rows = result.rows()
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["set", "ordering", "count"])
        writer.writerows(rows)
    return len(rows)
