"""Acceptance criteria 1-11.  Each test prints one "criterion N: PASS/FAIL" line
(also collected for the terminal summary)."""
import subprocess
import sys
import time

import pytest

from krklr import suites
from conftest import ACCEPTANCE

# pinned tolerances: every comparison is exact
MISMATCHES_ALLOWED = 0
MAX_SUITE_SECONDS = 120.0
CARTAN_MAX_RANK = 8
KR_MAX_RANK = 8
TABLES_MAX_RANK, TABLES_MINLEN, TABLES_MAXLEN = 6, 2, 12
TMOD_MAX_RANK, TMOD_MAXLEN = 5, 10
CROSS_RANKS, CROSS_DEPTH = (2, 3), 8
DECOMP_C_DEPTH, DECOMP_A_DEPTH = 6, 5
THEOREM_DEPTH = 7


def _fails(rep):
    return sum(v for k, v in rep["counts"].items() if k.endswith(" fail")) + sum(
        1 for _, ok in rep["checks"] if not ok)


def record(n, rep, note=""):
    fails = _fails(rep)
    ok = rep["ok"] and fails <= MISMATCHES_ALLOWED and rep["seconds"] <= MAX_SUITE_SECONDS
    line = "criterion %d: %s  (%s, %d failures, %.1fs)%s" % (
        n, "PASS" if ok else "FAIL", rep["suite"], fails, rep["seconds"], " " + note if note else "")
    print(line)
    ACCEPTANCE[n] = (ok, ("%s %s" % (rep["suite"], note)).strip())
    assert ok, rep["first_failure"]


def test_criterion_1_cartan():
    rep = suites.cartan_suite(max_rank=CARTAN_MAX_RANK).as_dict()
    # 8 families with ranks up to 8, A^(1)_1 included as the ninth type
    assert rep["counts"]["datum ok"] == 53
    record(1, rep)


def test_criterion_2_kr():
    rep = suites.kr_suite(max_rank=KR_MAX_RANK).as_dict()
    assert rep["counts"]["class table ok"] == rep["counts"]["walks+level0+axioms ok"] == 53
    record(2, rep)


def test_criterion_3_golden():
    rep = suites.golden_suite().as_dict()
    assert rep["psi_pairs"] == 10
    record(3, rep, "10 nodes / 10 pairs at depth 4")


def test_criterion_4_cross_model():
    rep = suites.cross_model_suite(CROSS_RANKS, CROSS_DEPTH).as_dict()
    assert len(rep["checks"]) == 2 * (3 + 4)
    record(4, rep)


def test_criterion_5_tables():
    rep = suites.tables_suite(max_rank=TABLES_MAX_RANK, minlen=TABLES_MINLEN,
                              maxlen=TABLES_MAXLEN).as_dict()
    c = rep["counts"]
    assert c["jump = table ok"] == 29137
    note = "exception class %d, outside rep %d" % (c["exception class"], c["outside rep"])
    record(5, rep, note)


def test_criterion_6_tmod():
    rep = suites.tmod_suite(max_rank=TMOD_MAX_RANK, maxlen=TMOD_MAXLEN).as_dict()
    assert rep["counts"]["relations ok"] == 2920
    record(6, rep, "2920 modules")


def test_criterion_7_anchors():
    rep = suites.anchors_suite().as_dict()
    # 2 type-A anchors + (c,n) pairs: 3 for a_hi = -1, 6 for a_ih = -2
    assert len(rep["checks"]) == 2 + 3 + 6
    record(7, rep)


def test_criterion_8_appendix():
    rep = suites.appendix_suite().as_dict()
    assert rep["counts"]["jump values"] == 32
    record(8, rep)


def test_criterion_9_decomposition():
    rep = suites.decomposition_suite(DECOMP_C_DEPTH, DECOMP_A_DEPTH).as_dict()
    assert len(rep["checks"]) == 6
    record(9, rep)


def test_criterion_10_theorem():
    rep = suites.theorem_runs(depth=THEOREM_DEPTH).as_dict()
    c = rep["counts"]
    assert c["F1"] > 0 and c["E1"] > 0
    record(10, rep, "low-k log %d (all k <= 1)" % c["low-k branch log"])


def _verify_all():
    cmd = [sys.executable, "-m", "krklr", "verify-all", "--no-timing", "--format", "json"]
    return subprocess.run(cmd, capture_output=True, check=False)


def test_criterion_11_determinism():
    t0 = time.perf_counter()
    a, b = _verify_all(), _verify_all()
    rep = {"suite": "determinism", "ok": a.returncode == 0 and a.stdout == b.stdout and bool(a.stdout),
           "counts": {}, "checks": [["byte-identical", a.stdout == b.stdout],
                                    ["exit 0", a.returncode == 0 and b.returncode == 0]],
           "first_failure": None if a.stdout == b.stdout else "reports differ",
           "seconds": (time.perf_counter() - t0) / 2}
    record(11, rep, "%d bytes" % len(a.stdout))
