import json

import pytest
from hypothesis import given, strategies as st

from krklr.cartan import FAMILIES, MIN_RANK
from krklr.kr import (TOP, NotPerfect, bar, build_b11, build_bl1_typeA, perfect_data, seeds,
                      structural_check)

# |B^{1,1}| per family, from the dimensions of the vector representations
SIZE = {"A1": lambda l: l + 1, "C1": lambda l: 2 * l, "A2even": lambda l: 2 * l + 1,
        "A2dag": lambda l: 2 * l + 1, "D2": lambda l: 2 * l + 2, "D1": lambda l: 2 * l,
        "B1": lambda l: 2 * l + 1, "A2odd": lambda l: 2 * l}

pairs = st.sampled_from(FAMILIES).flatmap(
    lambda f: st.tuples(st.just(f), st.integers(MIN_RANK[f], 8)))


@given(pairs)
def test_sizes(fr):
    f, r = fr
    assert len(build_b11(f, r)) == SIZE[f](r)


@given(pairs)
def test_structure(fr):
    assert structural_check(build_b11(*fr)) == []


def test_a2even_small():
    B = build_b11("A2even", 2)
    assert set(B.labels) == {"1", "2", bar(2), bar(1), TOP}
    top = B.id[TOP]
    assert B.eps(top) == (1, 0, 0) and B.phi(top) == (1, 0, 0)
    assert B.f(top, 0) == B.id["1"]


def test_perfect_typeA():
    B = build_b11("A1", 3)
    pd = perfect_data("A1", 3)
    assert pd == {i: (B.id[str(i)], (i + 1) % 4) for i in range(4)}
    with pytest.raises(NotPerfect):
        perfect_data("C1", 2)


def test_seeds_typeC():
    B = build_b11("C1", 2)
    got = sorted((B.labels[b], s, t) for b, s, t in seeds(B))
    assert got == sorted([("0", 0, 1), ("1", 1, 2), ("2", 2, 1), (bar(1), 1, 0)])


def test_reversed_is_involution():
    B = build_b11("A1", 3)
    R = build_bl1_typeA(3)
    assert sorted(R.reversed().arrows) == sorted(B.arrows)
    for b in B.nodes():
        assert R.eps(b) == B.phi(b)


def test_dump_schema():
    d = json.loads(build_b11("B1", 3).to_json())
    assert set(d) == {"nodes", "edges"}
    assert {"id", "wt", "eps", "phi", "depth", "nu"} <= set(d["nodes"][0])
    assert "digraph" in build_b11("B1", 3).to_dot()
