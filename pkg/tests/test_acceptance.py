"""Acceptance gate: one test per criterion, each at its stated tolerance and time limit.

Every test records a PASS/FAIL line; conftest prints them all at the end of the run.
"""
import subprocess
import sys
import time
from fractions import Fraction
from importlib import resources
from math import ceil

import numpy as np
import pytest

from lcrkn import (PointSet, SearchConfig, construct_five_part, construct_three_arcs, crossing_profile, edge_crossings,
                   is_general_position, lcr_formula, local_crossing_number, parse_pointset, search_witness,
                   serialize_pointset, tightness_diagnostic, verify_cluster_separation, verify_floor_by_sampling,
                   verify_secant_separation)
from lcrkn.constructions import case_maxima_report
from lcrkn.crossings import Edge
from lcrkn.formula import ceiling_form, class_form, three_arc_value
from lcrkn.search import DEFAULT_MOVES, DEFAULT_RESTARTS, DEFAULT_SEED
from lcrkn.separation import lemma_fuzz, random_point_set

FUZZ_COUNT = 10_000
RESULTS: dict[int, str] = {}


def record(num, ok, detail):
    RESULTS[num] = f"[{'PASS' if ok else 'FAIL'}] criterion {num:>2}: {detail}"
    print(RESULTS[num])
    assert ok, detail


@pytest.fixture(scope="module")
def fuzz():
    t0 = time.perf_counter()
    report = lemma_fuzz(FUZZ_COUNT, DEFAULT_SEED, (3, 15))
    return report, time.perf_counter() - t0


def test_criterion_01_formula_table():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 101):
        v = lcr_formula(n).value
        r = n % 3
        nine = {0: (n - 3) ** 2, 1: (n - 1) * (n - 4), 2: (n - 2) ** 2 - 9 * ((n - 2) // 6)}[r]
        piecewise = nine // 9 + (1 if n in (8, 14) else 0)
        if not (v == piecewise and ceiling_form(n) == class_form(n) == nine // 9):
            bad.append(n)
    spots = {8: 4, 14: 15, 9: 4, 10: 6, 11: 8, 17: 23, 20: 33}
    bad += [n for n, v in spots.items() if lcr_formula(n).value != v]
    dt = time.perf_counter() - t0
    record(1, not bad and dt < 1, f"formula table n=3..100 and spot values, mismatches={bad}, {dt:.3f}s (< 1s)")


def test_criterion_02_three_arcs():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 33):
        S = construct_three_arcs(n)
        r = n % 3
        expected = {0: (n - 3) ** 2, 1: (n - 1) * (n - 4), 2: (n - 2) ** 2}[r] // 9
        ok = (is_general_position(S.points) and verify_secant_separation(S)
              and local_crossing_number(S.points) == expected == three_arc_value(n))
        if not ok:
            bad.append(n)
    dt = time.perf_counter() - t0
    record(2, not bad and dt < 30, f"three-arc n=3..32, failures={bad}, {dt:.1f}s (< 30s)")


def test_criterion_03_five_part():
    t0 = time.perf_counter()
    bad = []
    for k in range(4, 9):
        S = construct_five_part(k)
        expected = k * k + 4 * k + 3 - k // 2
        rep = case_maxima_report(S)
        lcr = local_crossing_number(S.points)
        ok = (verify_cluster_separation(S) and lcr == expected == lcr_formula(3 * k + 8).value
              and max(rep.values()) == lcr and rep[("B1", "C2")] == lcr)
        if not ok:
            bad.append(k)
    dt = time.perf_counter() - t0
    record(3, not bad and dt < 60, f"five-part k=4..8, failures={bad}, {dt:.1f}s (< 60s)")


def test_criterion_04_lemma_fuzz(fuzz):
    report, dt = fuzz
    ok = report.witness_failures == 0 and report.unsound_certificates == 0 and dt < 120
    record(4, ok, f"{report.instances} sets: witness failures={report.witness_failures} "
                  f"{dict(report.witness_failure_shapes)}, unsound certificates={report.unsound_certificates}, "
                  f"{dt:.1f}s (< 120s)")


def test_lemma_fuzz_failures_are_all_triangle_plus_one(fuzz):
    # characterizes criterion 4's failures: only a triangle with one interior point lacks a witness
    report, _ = fuzz
    assert set(report.witness_failure_shapes) <= {"n=4,hull=3"}
    assert report.unsound_certificates == 0
    assert sum(report.witnesses_by_kind.values()) + report.witness_failures == report.instances


def test_criterion_05_class_floor(fuzz):
    report, dt = fuzz
    t0 = time.perf_counter()
    sampled = verify_floor_by_sampling(8, 1000, DEFAULT_SEED)
    dt += time.perf_counter() - t0
    ok = report.below_class_bound == 0 and sampled >= 4 and dt < 120
    record(5, ok, f"below class bound={report.below_class_bound} of {report.instances}, "
                  f"sampled min lcr at n=8 = {sampled} (>= 4), {dt:.1f}s (< 120s)")


def _golden(n):
    return parse_pointset(resources.files("lcrkn").joinpath(f"data/witness_n{n}.txt").read_text())


def test_criterion_06_small_witnesses():
    t0 = time.perf_counter()
    parts = []
    ok = True
    for n, target in ((5, 1), (11, 8), (17, 23)):
        res = search_witness(SearchConfig(n=n, target=target), workers=1)
        prof = crossing_profile(res.best)
        direct = max(edge_crossings(res.best, Edge(u, v)) for u in range(n) for v in range(u + 1, n))
        hit = res.achieved_target and prof.lcr == direct == target == lcr_formula(n).value
        hit = hit and res.best == _golden(n)
        ok &= hit
        parts.append(f"n={n}:{prof.lcr}@{res.iterations_used}mv")
    dt = time.perf_counter() - t0
    budget = f"{DEFAULT_RESTARTS}x{DEFAULT_MOVES} seed {DEFAULT_SEED}"
    record(6, ok and dt < 600, f"{' '.join(parts)} (budget {budget}), golden files match, {dt:.1f}s (< 600s)")


# n = 14 soft check budget for the unreachable target
SOFT_RESTARTS, SOFT_MOVES = 16, 5_000


def test_criterion_07_n14_soft_check():
    t0 = time.perf_counter()
    low = search_witness(SearchConfig(n=14, target=14, restarts=SOFT_RESTARTS, moves_per_restart=SOFT_MOVES),
                         workers=1)
    high = search_witness(SearchConfig(n=14, target=15), workers=1)
    verified = crossing_profile(high.best).lcr == 15 and high.best == _golden(14)
    ok = not low.achieved_target and high.achieved_target and verified
    dt = time.perf_counter() - t0
    record(7, ok, f"soft: target 14 best={low.best_lcr} under {SOFT_RESTARTS}x{SOFT_MOVES} (not reached), "
                  f"target 15 reached and verified={verified}, {dt:.1f}s")


def test_criterion_08_handshake_and_averaging(fuzz):
    report, _ = fuzz
    ok = report.handshake_failures == 0 and report.averaging_failures == 0
    record(8, ok, f"{report.instances} sets: handshake failures={report.handshake_failures}, "
                  f"averaging failures={report.averaging_failures}")


def test_criterion_09_tightness():
    t0 = time.perf_counter()
    values = {}
    for n in (9, 12, 15, 18):
        values[n] = (tightness_diagnostic(construct_three_arcs(n).points), ceil((n - 3) / 3) - 1)
    dt = time.perf_counter() - t0
    ok = all(v >= lo for v, lo in values.values()) and dt < 30
    record(9, ok, f"min path imbalance vs bound {values}, {dt:.1f}s (< 30s)")


CLI_RUNS = [
    ["formula", "14"],
    ["formula", "--table", "3", "40"],
    ["construct", "three-arcs", "12", "--out", "{d}/c.txt", "--svg", "{d}/c.svg"],
    ["construct", "five-part", "5", "--report"],
    ["analyze", "{golden}", "--profile", "--lemma"],
    ["lemma", "{golden}"],
    ["lemma", "--fuzz", "200", "--seed", "3", "--n-range", "5", "12"],
    ["search", "9", "--seed", "4", "--restarts", "2", "--moves", "400", "--out", "{d}/s.txt", "--log", "{d}/s.json"],
    ["svg", "{golden}", "--out", "{d}/g.svg"],
]


def _cli(argv, d, golden):
    args = [a.format(d=d, golden=golden) for a in argv]
    proc = subprocess.run([sys.executable, "-m", "lcrkn", *args], capture_output=True)
    files = sorted(p.name for p in d.iterdir())
    return proc.returncode, proc.stdout, proc.stderr, {f: (d / f).read_bytes() for f in files}


def test_criterion_10_round_trip_and_determinism(tmp_path):
    rng = np.random.default_rng(DEFAULT_SEED)
    trips = 0
    for i in range(1000):
        P = random_point_set(int(rng.integers(0, 13)), rng, bound=2**40)
        if i % 2:
            den = int(rng.integers(1, 10**6))
            P = PointSet.from_coords([(x / den, y / Fraction(den + 1)) for x, y in P.coords])
        text = serialize_pointset(P)
        if parse_pointset(text) == P and serialize_pointset(parse_pointset(text)) == text:
            trips += 1
    golden = resources.files("lcrkn").joinpath("data/witness_n11.txt")
    unstable = []
    for k, argv in enumerate(CLI_RUNS):
        outs = []
        for rep in range(2):
            d = tmp_path / f"{k}_{rep}"
            d.mkdir()
            outs.append(_cli(argv, d, golden))
        if outs[0] != outs[1] or outs[0][0] != 0:
            unstable.append(" ".join(argv[:2]))
    ok = trips == 1000 and not unstable
    record(10, ok, f"round trips {trips}/1000, CLI commands run twice: {len(CLI_RUNS)} checked, "
                   f"non-identical or failing={unstable}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
