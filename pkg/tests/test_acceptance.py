"""Acceptance gate: eleven criteria, each printing one pass/fail line.

Expensive corpora (the exhaustive n <= 6 labeled family and the big random
sweeps) are computed once per session and shared across criteria.
"""

from __future__ import annotations

import json
import subprocess
import sys
import time

import pytest

from critindep import (alpha, critical_difference, difference,
                       enumerate_minimal_positive_sets, generate, is_ke, mu,
                       recognize)
from critindep.verification import CHECKS, SweepConfig, run_sweep

from common import c3_with_pendant, figure2_script, witness_graph

UNICYCLIC_CHECK_IDS = [
    "unicyclic_formulas", "unicyclic_roundtrip", "theorem_4_3",
    "theorem_4_4", "lemma_4_12", "theorem_4_14", "core_in_black",
    "corollary_4_17", "corollary_5_6",
]

THEOREM_SUITE_IDS = [
    "theorem_2_2", "theorem_2_3", "theorem_2_5ii", "theorem_2_6",
    "corollary_2_11", "conjecture_1_1", "theorem_2_7", "theorem_2_12",
    "theorem_2_14", "theorem_2_15", "lemma_3_1", "theorem_3_2",
    "ker_diadem_inequality",
]


@pytest.fixture(scope="session")
def exhaustive_sweep():
    """Every labeled graph with n <= 6 (32,768 graphs at n = 6 alone),
    run against the full check registry."""
    return run_sweep(SweepConfig(family="exhaustive-labeled",
                                 min_n=1, max_n=6, seed=0))


@pytest.fixture(scope="session")
def random12_sweep():
    """500 seeded random graphs with n <= 12, full check registry."""
    return run_sweep(SweepConfig(family="random-gnp", min_n=1, max_n=12,
                                 samples=500, seed=11))


@pytest.fixture(scope="session")
def unicyclic_sweep():
    started = time.monotonic()
    result = run_sweep(SweepConfig(family="unicyclic-generated", samples=500,
                                   seed=7, checks=UNICYCLIC_CHECK_IDS))
    return result, time.monotonic() - started


def report(capsys, number: int, label: str, ok: bool) -> None:
    with capsys.disabled():
        print(f"acceptance criterion {number:2d} ({label}): "
              f"{'PASS' if ok else 'FAIL'}")
    assert ok, f"criterion {number} ({label}) failed"


def clean(result, check_id: str, expect_runs: int | None = None) -> bool:
    counts = result.counts[check_id]
    if counts["fail"]:
        return False
    if expect_runs is not None and counts["pass"] != expect_runs:
        return False
    return counts["pass"] > 0


def test_criterion_01_dc_oracle_agreement(capsys, exhaustive_sweep):
    ok = clean(exhaustive_sweep, "dc_oracle_agreement",
               expect_runs=exhaustive_sweep.graphs)
    started = time.monotonic()
    rand = run_sweep(SweepConfig(family="random-gnp", min_n=1, max_n=14,
                                 samples=2000, seed=101,
                                 checks=["dc_oracle_agreement"]))
    elapsed = time.monotonic() - started
    ok = ok and rand.graphs == 2000 and clean(rand, "dc_oracle_agreement",
                                              expect_runs=2000)
    ok = ok and elapsed < 120
    report(capsys, 1, "d_c double cover vs exhaustive oracle", ok)


def test_criterion_02_ker(capsys, exhaustive_sweep, random12_sweep):
    ok = clean(exhaustive_sweep, "ker_is_intersection",
               expect_runs=exhaustive_sweep.graphs)
    ok = ok and clean(random12_sweep, "ker_is_intersection",
                      expect_runs=random12_sweep.graphs)
    report(capsys, 2, "ker equals intersection of critical sets", ok)


def test_criterion_03_diadem(capsys, exhaustive_sweep, random12_sweep):
    ok = clean(exhaustive_sweep, "diadem_is_union",
               expect_runs=exhaustive_sweep.graphs)
    ok = ok and clean(random12_sweep, "diadem_is_union",
                      expect_runs=random12_sweep.graphs)
    report(capsys, 3, "diadem equals union of critical independent sets", ok)


def test_criterion_04_theorem_suite(capsys, exhaustive_sweep, random12_sweep):
    ok = all(clean(exhaustive_sweep, cid) for cid in THEOREM_SUITE_IDS)
    ok = ok and all(not random12_sweep.counts[cid]["fail"]
                    for cid in THEOREM_SUITE_IDS)
    bipartite = run_sweep(SweepConfig(family="random-bipartite", min_n=1,
                                      max_n=14, samples=500, seed=13,
                                      checks=["theorem_2_4"]))
    ok = ok and bipartite.graphs == 500 and clean(bipartite, "theorem_2_4")
    report(capsys, 4, "full theorem suite incl. bipartite ker = core", ok)


def test_criterion_05_matching(capsys, exhaustive_sweep):
    ok = clean(exhaustive_sweep, "matching_oracle_agreement",
               expect_runs=exhaustive_sweep.graphs)
    rand = run_sweep(SweepConfig(family="random-gnp", min_n=1, max_n=9,
                                 samples=1000, seed=17,
                                 checks=["matching_oracle_agreement"]))
    ok = ok and rand.graphs == 1000 and clean(
        rand, "matching_oracle_agreement", expect_runs=1000)
    report(capsys, 5, "blossom matching vs brute-force oracle", ok)


def test_criterion_06_figure2(capsys):
    cu = generate(figure2_script())
    g = cu.graph
    a, m = alpha(g), mu(g)
    ok = (g.n == 21 and len(cu.black) == 9 and len(cu.red) == 7
          and a == 11 and m == 9
          and critical_difference(g) == 2
          and a - m == 2
          and a + m == 20 == g.n - 1)
    report(capsys, 6, "Figure 2 reproduction", ok)


def test_criterion_07_unicyclic_sweep(capsys, unicyclic_sweep):
    result, elapsed = unicyclic_sweep
    ok = result.graphs == 500 and elapsed < 60
    for cid in UNICYCLIC_CHECK_IDS:
        ok = ok and clean(result, cid)
    # every generated graph must satisfy the formula and round-trip checks
    ok = ok and result.counts["unicyclic_formulas"]["pass"] == 500
    ok = ok and result.counts["unicyclic_roundtrip"]["pass"] == 500
    report(capsys, 7, "500-graph unicyclic sweep under one minute", ok)


def test_criterion_08_disconnected(capsys):
    result = run_sweep(SweepConfig(family="unicyclic-disconnected",
                                   samples=100, seed=23,
                                   checks=["conjecture_1_3"]))
    ok = (result.graphs == 100
          and clean(result, "conjecture_1_3", expect_runs=100))
    report(capsys, 8, "disconnected unicyclic d_c = alpha - mu", ok)


def test_criterion_09_gallai_edmonds(capsys, exhaustive_sweep,
                                     unicyclic_sweep):
    ge_ids = ["ge_oracle_agreement", "theorem_5_3", "corollary_5_6"]
    ok = all(clean(exhaustive_sweep, cid) for cid in ge_ids)
    rand = run_sweep(SweepConfig(family="random-gnp", min_n=1, max_n=9,
                                 samples=300, seed=29, checks=ge_ids))
    ok = ok and all(clean(rand, cid) for cid in ge_ids)
    ok = ok and clean(unicyclic_sweep[0], "corollary_5_6")
    report(capsys, 9, "Gallai-Edmonds partition and localization", ok)


def test_criterion_10_negative_controls(capsys):
    g = witness_graph()
    ok = enumerate_minimal_positive_sets(g) == [{0}]
    # the single-removal trap: {0,1,2} looks minimal under single removals
    ok = ok and difference(g, [0, 1, 2]) == 1
    ok = ok and all(difference(g, {0, 1, 2} - {v}) <= 0 for v in (0, 1, 2))
    pendant = c3_with_pendant()
    ok = ok and recognize(pendant) is None and is_ke(pendant)
    report(capsys, 10, "negative controls", ok)


def test_criterion_11_determinism(capsys):
    argv = [sys.executable, "-m", "critindep.cli", "verify",
            "--family", "random-gnp", "--max-n", "8", "--samples", "25",
            "--seed", "3", "--json", "--no-timestamp"]
    first = subprocess.run(argv, capture_output=True)
    second = subprocess.run(argv, capture_output=True)
    ok = (first.returncode == 0 and second.returncode == 0
          and first.stdout == second.stdout and first.stdout)
    payload = json.loads(first.stdout)
    ok = bool(ok) and payload["failures"] == []
    report(capsys, 11, "verify output is byte-identical per seed", ok)
