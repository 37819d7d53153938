"""Exit criteria. Each test prints one ``ACCEPTANCE <id> PASS|FAIL`` line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""
import json
import os
from fractions import Fraction

import pytest

from wilfcheck.bounds import (BoundId, check_2star, check_3star, check_lemma3,
                              check_prop_b, check_wilf, check_zhai)
from wilfcheck.cli import main
from wilfcheck.core import FULL, from_generators
from wilfcheck.enumeration import enumerate_bruteforce, enumerate_tree, scan, walk
from wilfcheck.errors import WitnessNotFound
from wilfcheck.invariants import invariants_of
from wilfcheck.lemma import build_witness_cover, verify_lemma_bound

SCAN_GENUS = 25
SCAN_SECONDS = 300.0
ORACLE_GENUS = 8
LEMMA_GENUS = 20
REARRANGE_GENUS = 15
DENSITY_GENUS = 20
DETERMINISM_GENUS = 15


@pytest.fixture
def report_line(capsys):
    def emit(cid, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {cid} {'PASS' if ok else 'FAIL'}: {detail}")
    return emit


def test_c1_exhaustive_bounds(report_line):
    r = scan(SCAN_GENUS, worker_count=len(os.sched_getaffinity(0)))
    violations = {b.value: st.violation_count for b, st in r.per_bound.items()}
    ok = (r.bounds == tuple(BoundId)
          and all(v == 0 for v in violations.values())
          and not r.counterexamples
          and r.per_bound[BoundId.PROP_A].checked > 0
          and r.wall_time < SCAN_SECONDS)
    report_line("C1", ok,
                f"genus<=25, {r.semigroups_checked} semigroups "
                f"({r.counts_per_genus[SCAN_GENUS]} at genus 25), violations={violations}, "
                f"{r.wall_time:.1f}s")
    assert all(v == 0 for v in violations.values())
    assert not r.counterexamples
    assert r.per_bound[BoundId.PROP_A].checked > 0
    assert r.counts_per_genus[:ORACLE_GENUS + 1] == [
        len(enumerate_bruteforce(g)) for g in range(ORACLE_GENUS + 1)]
    assert r.wall_time < SCAN_SECONDS


def test_c2_oracle_equivalence(report_line):
    tree = {g: [] for g in range(ORACLE_GENUS + 1)}
    for s in walk(FULL, ORACLE_GENUS):
        tree[s.genus].append(s.atoms)
    mismatched = []
    counts = []
    for g in range(ORACLE_GENUS + 1):
        brute = [s.atoms for s in enumerate_bruteforce(g)]
        counts.append(len(brute))
        if sorted(tree[g]) != brute:
            mismatched.append(g)
    report_line("C2", not mismatched, f"genus<=8 counts {counts}, mismatched genera {mismatched}")
    assert not mismatched


def test_c3_lemma_certification(report_line):
    stats = {"visited": 0, "missing": 0, "failed": 0}

    def visit(s):
        if s.is_full:
            return
        stats["visited"] += 1
        try:
            cover = build_witness_cover(s)
        except WitnessNotFound:
            stats["missing"] += 1
            return
        if not verify_lemma_bound(cover).holds:
            stats["failed"] += 1

    enumerate_tree(LEMMA_GENUS, visit)
    ok = stats["missing"] == 0 and stats["failed"] == 0
    report_line("C3", ok, f"genus<=20, {stats}")
    assert ok


def test_c4_rearrangements(report_line):
    bad = []

    def visit(s):
        if s.is_full:
            return
        i = invariants_of(s)
        zhai, lemma = check_zhai(i).holds, check_lemma3(i).holds
        if zhai != check_2star(i).holds or lemma != check_3star(i).holds:
            bad.append(s.atoms)
        elif zhai and lemma and not check_prop_b(i).holds:
            bad.append(s.atoms)

    n = enumerate_tree(REARRANGE_GENUS, visit)
    report_line("C4", not bad, f"genus<=15, {n - 1} semigroups, {len(bad)} failures")
    assert not bad


def test_c5_equality_cases(report_line):
    i = invariants_of(from_generators([2, 3]))
    equal = all(fn(i).is_equality for fn in (check_wilf, check_prop_b, check_lemma3))
    densities = set()
    count = [0]

    def visit(s):
        if len(s.atoms) == 2:
            count[0] += 1
            densities.add(invariants_of(s).wilf_density)

    enumerate_tree(DENSITY_GENUS, visit)
    ok = equal and densities == {Fraction(1, 2)}
    report_line("C5", ok, f"<2,3> equalities={equal}; {count[0]} e=2 semigroups, densities {densities}")
    assert equal
    assert densities == {Fraction(1, 2)}


def test_c6_headline_constants(report_line):
    lowest = {4: None, 5: None}

    def visit(s):
        e = len(s.atoms)
        if e in lowest:
            d = invariants_of(s).wilf_density
            if lowest[e] is None or d < lowest[e]:
                lowest[e] = d

    enumerate_tree(DENSITY_GENUS, visit)
    ok = lowest[4] > Fraction(1, 6) and lowest[5] > Fraction(1, 10)
    report_line("C6", ok, f"genus<=20, min d (e=4)={lowest[4]} > 1/6, min d (e=5)={lowest[5]} > 1/10")
    assert lowest[4] > Fraction(1, 6)
    assert lowest[5] > Fraction(1, 10)


def test_c7_parallel_determinism(report_line, capsys):
    payloads = {}
    for threads in (1, 4, 8):
        code = main(["verify", "--max-genus", str(DETERMINISM_GENUS), "--threads", str(threads)])
        out = capsys.readouterr().out
        assert code == 0
        p = json.loads(out)["payload"]
        p.pop("wall_time")
        payloads[threads] = json.dumps(p, sort_keys=True).encode()
    ok = payloads[1] == payloads[4] == payloads[8]
    report_line("C7", ok, f"verify --max-genus 15 payload bytes identical for threads 1/4/8 "
                          f"({len(payloads[1])} bytes)")
    assert ok
