import csv
import math

import pytest

from pinnacles import (
    PinnacleError,
    PinnacleOrdering,
    PinnacleSet,
    VerificationError,
    dump_csv,
    enumerate_admissible_orderings,
    oracle_admissible_sets,
    oracle_orderings,
    scan,
    verify_against_core,
)
from pinnacles.oracle import Mismatch, VerificationReport, _scan_block

import brute


@pytest.fixture(scope="module")
def scans():
    return {n: scan(n, include_empty=True) for n in range(1, 10)}


def test_n1(scans):
    assert scans[1].by_set == {PinnacleSet(): {PinnacleOrdering(()): 1}}


def test_n3_counts(scans):
    got = {str(s): {str(a): c for a, c in d.items()} for s, d in scans[3].by_set.items()}
    assert got == {"": {"": 4}, "3": {"3": 2}}


@pytest.mark.parametrize("n", range(1, 10))
def test_count_conservation(scans, n):
    assert scans[n].total == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_sets_stay_within_universe(scans, n):
    for s in scans[n].by_set:
        assert len(s) == 0 or s.max <= n


def test_default_scan_omits_empty_set():
    s = scan(5)
    assert PinnacleSet() not in s
    assert s.total < math.factorial(5)


def test_admissible_sets_small(scans):
    assert oracle_admissible_sets(scans[2]) == frozenset()
    assert oracle_admissible_sets(scans[4]) == {PinnacleSet((3,)), PinnacleSet((4,))}
    assert PinnacleSet((3, 5, 7)) in oracle_admissible_sets(scans[7])
    assert PinnacleSet() in oracle_admissible_sets(scans[4], include_empty=True)


def test_admissible_sets_match_brute(scans):
    for n in range(1, 8):
        expected = {PinnacleSet.of(k) for k in brute.realized(n) if k}
        assert oracle_admissible_sets(scans[n]) == expected


def test_orderings_357(scans):
    got = {a.sequence for a in oracle_orderings(scans[7], (3, 5, 7))}
    assert got == {(3, 5, 7), (5, 3, 7), (7, 3, 5), (7, 5, 3)}
    assert oracle_orderings(scans[3], (3,)) == {PinnacleOrdering((3,))}


def test_unknown_set_is_empty_but_distinguishable(scans):
    assert oracle_orderings(scans[7], (3, 4)) == frozenset()
    assert (3, 4) not in scans[7]
    assert (3, 5, 7) in scans[7]


def test_realization_is_monotone_in_n(scans):
    for n in range(2, 10):
        for s, orderings in scans[n].by_set.items():
            if not len(s):
                continue
            assert set(orderings) == set(scans[s.max].by_set[s])


def test_parallel_partition_is_deterministic(scans):
    parts = [_scan_block(6, f) for f in (4, 1, 6, 2, 5, 3)]
    merged = {}
    for part in parts:
        for seq, c in part.items():
            merged[seq] = merged.get(seq, 0) + c
    flat = {a.sequence: c for d in scans[6].by_set.values() for a, c in d.items()}
    assert merged == flat


def test_process_pool_scan_matches_inline(scans):
    pooled = scan(7, include_empty=True, workers=2)
    assert pooled.by_set == scans[7].by_set


@pytest.mark.parametrize("n", [0, 12, -3])
def test_scan_bounds(n):
    with pytest.raises(PinnacleError):
        scan(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_verify_against_core(scans, n):
    report = verify_against_core(n, scans[n])
    assert report.ok, report.summary()
    assert report.mismatches == ()


def test_verify_n1_is_vacuous():
    report = verify_against_core(1)
    assert report.ok and report.orderings_checked == 0


def test_verify_counts_at_7(scans):
    report = verify_against_core(7, scans[7])
    top = [k for k in brute.realized(7) if k and max(k) == 7]
    assert report.sets_checked == len(top) == 10
    assert report.orderings_checked == sum(len(brute.realized(7)[k]) for k in top) == 35


def test_verify_detects_tampering(scans):
    doctored = scan(7)
    del doctored.by_set[PinnacleSet((3, 5, 7))][PinnacleOrdering((5, 3, 7))]
    doctored.by_set[PinnacleSet((3, 5, 7))][PinnacleOrdering((3, 7, 5))] = 1
    report = verify_against_core(7, doctored)
    kinds = sorted((m.kind, str(m.ordering)) for m in report.mismatches)
    assert ("core-only ordering", "5,3,7") in kinds
    assert ("oracle-only ordering", "3,7,5") in kinds
    assert ("bad witness", "5,3,7") in kinds
    with pytest.raises(VerificationError):
        verify_against_core(7, doctored, raise_on_mismatch=True)


def test_verify_rejects_wrong_level(scans):
    with pytest.raises(PinnacleError):
        verify_against_core(6, scans[7])


def test_mismatch_str():
    m = Mismatch(PinnacleSet((3, 5, 7)), PinnacleOrdering((3, 7, 5)), "oracle-only ordering", "x")
    assert str(m) == "oracle-only ordering: {3,5,7} (3,7,5): x"
    assert not VerificationReport(7, 1, 1, (m,)).ok


def test_dump_csv(tmp_path, scans):
    path = tmp_path / "s5.csv"
    rows = dump_csv(scans[5], path)
    with open(path, newline="") as fh:
        table = list(csv.reader(fh))
    assert table[0] == ["set", "ordering", "count"]
    body = table[1:]
    assert len(body) == rows
    keys = [(r[0], r[1]) for r in body]
    assert keys == sorted(keys)
    assert sum(int(r[2]) for r in body) == math.factorial(5)
    assert ["5", "5", str(sum(1 for _ in brute_count(5, (5,))))] in body


def brute_count(n, seq):
    import itertools

    return (w for w in itertools.permutations(range(1, n + 1)) if brute.peaks(w) == seq)


def test_orderings_match_brute_force(scans):
    for n in range(3, 9):
        for s in oracle_admissible_sets(scans[n]):
            if s.max == n:
                assert {a.sequence for a in oracle_orderings(scans[n], s)} == brute.realized_orderings(s.elements)
                assert set(oracle_orderings(scans[n], s)) == set(enumerate_admissible_orderings(s))
