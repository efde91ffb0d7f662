import json

from hypothesis import given, settings, strategies as st

from krklr.cartan import FAMILIES, MIN_RANK, build_cartan
from krklr.crystal import rooted_iso
from krklr.hw import (PartitionCrystal, bootstrap, build_cached, hw_check, level2_crystal,
                      partition_model, seed_table)
from krklr.kr import build_b11


def regular_counts(n, depth):
    """Coefficients of prod over m not divisible by n of 1/(1 - q^m)."""
    c = [1] + [0] * depth
    for m in range(1, depth + 1):
        if m % n == 0:
            continue
        for k in range(m, depth + 1):
            c[k] += c[k - m]
    return c


def test_regular_counts_oracle():
    assert regular_counts(3, 5) == [1, 1, 2, 2, 4, 5]


@settings(max_examples=20)
@given(st.integers(1, 3).flatmap(lambda r: st.tuples(st.just(r), st.integers(0, r))),
       st.integers(1, 6))
def test_typeA_layer_sizes(ri, depth):
    r, i = ri
    G = bootstrap("A1", r, 6).crystals[i]
    layers = [0] * (depth + 1)
    for b in G.nodes():
        if G.depth[b] <= depth:
            layers[G.depth[b]] += 1
    assert layers == regular_counts(r + 1, depth)


def test_partition_model_agrees():
    for r in (2, 3):
        boot = bootstrap("A1", r, 6)
        for i in range(r + 1):
            P = partition_model(r, i, 6)
            assert rooted_iso(boot.crystals[i], 0, P, 0, 6)[0]


def test_partition_operators():
    P = PartitionCrystal(2, 0)
    assert P.f((), 0) == (1,)
    assert P.f((1,), 2) == (1, 1)
    assert P.e((2, 1), 2) == (2,)
    assert P.residue_content((2, 1)) == (1, 1, 1)


@settings(max_examples=12)
@given(st.sampled_from(FAMILIES))
def test_bootstrap_is_highest_weight(f):
    r = MIN_RANK[f] + (1 if f == "A1" else 0)
    boot = bootstrap(f, r, 5)
    for t, G in boot.crystals.items():
        assert hw_check(G) == []
        assert G.wt(G.root) == build_cartan(f, r).fundamental(t)


def test_seed_choice_typeC():
    B = build_b11("C1", 2)
    tab = seed_table(B)
    assert {t: (B.labels[b], s) for t, (b, s) in tab.items()} == {
        0: ("1̄", 1), 1: ("0", 0), 2: ("1", 1)}


def test_level2_seed_depths():
    D = build_cartan("A2even", 3)
    ex = level2_crystal("A2even", 3, D.fundamental(3), 4)
    assert (ex.seed_depth, ex.multiplicity) == (6, 1)
    assert ex.trusted >= 4
    assert hw_check(ex.graph) == []


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("KRK_CACHE_DIR", str(tmp_path))
    G1 = build_cached("C1", 2, 0, 4)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    G2 = build_cached("C1", 2, 0, 4)
    assert G1.to_json() == G2.to_json()
    assert json.loads(files[0].read_text())["nodes"][0]["depth"] == 0


def test_perfect_single_summand():
    from krklr.hw import perfect_decomposition_check
    ok, det = perfect_decomposition_check("A1", 2, 2, 6)
    assert ok and [d[2] for d in det] == ["L0"]
    ok, det = perfect_decomposition_check("D1", 4, 0, 5)
    assert ok and len(det) == 1
