import json

import pytest
from hypothesis import given, strategies as st

from krklr.cartan import (FAMILIES, MIN_RANK, CartanError, appendix_datum, build_cartan,
                          cartan_matrix, check_datum, level_list, minimal_symmetrizer)

# frozen by hand from the Dynkin diagrams (Kac numbering)
C1_2 = [[2, -1, 0], [-2, 2, -2], [0, -1, 2]]
A2EVEN_2 = [[2, -2, 0], [-1, 2, -2], [0, -1, 2]]


def test_small_matrices():
    assert cartan_matrix("C1", 2) == C1_2
    assert cartan_matrix("A2even", 2) == A2EVEN_2
    assert cartan_matrix("A1", 1) == [[2, -2], [-2, 2]]


def test_symmetrizers():
    assert build_cartan("C1", 2).d == [2, 1, 2]
    assert build_cartan("A2even", 2).d == [1, 2, 4]
    assert build_cartan("A1", 4).d == [1] * 5
    assert appendix_datum().d == [2, 1]


def test_levels_and_marks():
    D = build_cartan("D1", 4)
    assert list(D.c) == [1, 1, 2, 1, 1]
    assert list(build_cartan("A2even", 3).c) == [1, 2, 2, 2]
    assert list(build_cartan("C1", 3).marks()) == [1, 2, 2, 1]
    assert level_list("A2odd", 4) == [1, 1, 2, 2, 2]


def test_rank_bound():
    with pytest.raises(CartanError):
        build_cartan("D1", 3)
    with pytest.raises(CartanError):
        build_cartan("E6", 6)


def test_json_roundtrip():
    d = json.loads(build_cartan("B1", 3).to_json())
    assert d["type"] == "B1" and d["rank"] == 3
    assert d["cartan"] == build_cartan("B1", 3).a


pairs = st.sampled_from(FAMILIES).flatmap(
    lambda f: st.tuples(st.just(f), st.integers(MIN_RANK[f], 8)))


@given(pairs)
def test_datum_invariants(fr):
    D = build_cartan(*fr)
    assert check_datum(D) == []
    # symmetric bilinear form
    for i in D.I:
        for j in D.I:
            assert D.bilinear(i, j) == D.bilinear(j, i)


@given(pairs)
def test_symmetrizer_is_minimal(fr):
    a = cartan_matrix(*fr)
    d = minimal_symmetrizer(a)
    assert min(d) == 1
    # no smaller common scale exists
    for k in range(2, max(d) + 1):
        assert not all(x % k == 0 for x in d)
