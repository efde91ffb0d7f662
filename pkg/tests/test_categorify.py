import pytest

from krklr.categorify import PsiMap, theorem_suite, typeC_branching_check, walks_into
from krklr.kr import build_b11


def test_typeC_rows():
    for r in (2, 3):
        rows = typeC_branching_check(r)
        assert rows and all(ok for _, ok in rows), rows


@pytest.mark.parametrize("fam,rank,skip", [("A2even", 2, ()), ("D2", 2, (1,)), ("C1", 3, ())])
def test_theorem_small(fam, rank, skip):
    rep = theorem_suite(fam, rank, 5, skip)
    assert rep.ok, rep.failures[:3]
    assert rep.counts["F1"] > 0 and rep.counts["E2"] > 0
    assert all(entry[4] <= 1 for entry in rep.low_k_log)


def test_root_decomposes_to_seed():
    psi = PsiMap("A1", 2, 4)
    for t in psi.targets():
        d = psi.decompose(t, psi.crystal(t).root)
        assert d.k == 0 and d.b == psi.boot.seed[t][0]


def test_decomposition_typeC():
    psi = PsiMap("C1", 2, 5)
    d = psi.decompose(0, 3)
    B = psi.B
    assert (B.labels[d.b], d.word, d.k) == ("1", (0, 1), 2)
    assert sum(d.gamma) == d.k


def test_strictness():
    psi = PsiMap("B1", 3, 5)
    for t in psi.targets():
        assert psi.strictness(t) == []


def test_walks_into():
    B = build_b11("A1", 2)
    got = walks_into(B, B.id["1"], (1, 1, 0))
    assert got == [((0, 1), (B.id["2"], B.id["0"], B.id["1"]))]
