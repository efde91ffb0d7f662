import pytest
from hypothesis import assume, given, settings, strategies as st

from krklr.cartan import FAMILIES, MIN_RANK
from krklr.characters import in_rep
from krklr.kr import build_b11
from krklr.paths import (FORBIDDEN, NoWalk, all_words, classify, cyclotomic_existence_check,
                         d_equivalent, derive_classes, extend_sets, forbidden, is_cyclotomic,
                         is_exception, phi_hat, realize, table_classes, walks)
from krklr.trivial import closed_form_char

pairs = st.sampled_from(FAMILIES).flatmap(
    lambda f: st.tuples(st.just(f), st.integers(MIN_RANK[f], 6)))


@given(pairs)
def test_class_table_from_graph(fr):
    f, r = fr
    assert derive_classes(build_b11(f, r)) == table_classes(f, r)


def test_forbidden_frozen():
    assert FORBIDDEN == {("D2", 2): {1}, ("D1", 4): {2}, ("B1", 3): {2}}
    miss = cyclotomic_existence_check("B1", 3, 8)
    assert {i for i, k in miss.items() if k is not None} == {2}
    assert forbidden("B1", 4) == set()


def test_extend_sets_typeA():
    B = build_b11("A1", 2)
    assert extend_sets(B, (0, 1)) == ({2}, {2})
    assert realize(B, (0, 1)).names() == ["2", "0", "1"]


def test_no_walk():
    B = build_b11("A1", 2)
    with pytest.raises(NoWalk):
        realize(B, (0, 0))


def test_cyclotomic_D1():
    B = build_b11("D1", 5)
    cls = classify("D1", 5)
    assert is_cyclotomic(B, cls, (0, 2, 3), 1, 0)
    assert not is_cyclotomic(B, cls, (0, 2, 3), 2, 0)


def test_d_equivalence():
    cls = classify("A2odd", 3)
    assert d_equivalent(cls, (0, 1, 2), (1, 0, 2))
    assert not d_equivalent(cls, (0, 1, 2), (0, 2, 1))


@st.composite
def words(draw, lo=2, hi=7):
    f, r = draw(pairs)
    k = draw(st.integers(lo, hi))
    ws = all_words(build_b11(f, r), k)
    return f, r, draw(st.sampled_from(ws))


@settings(max_examples=150, deadline=None)
@given(words())
def test_walk_unique(data):
    f, r, w = data
    assert len(walks(build_b11(f, r), w)) == 1


@settings(max_examples=150, deadline=None)
@given(words())
def test_oracle_matches_table_in_rep(data):
    f, r, w = data
    B = build_b11(f, r)
    cls = classify(f, r)
    c = closed_form_char(f, r, w)
    assume(in_rep(c, B.datum.fundamental(w[0])))
    for j, h in phi_hat(B, cls, w).items():
        if is_exception(cls, w, j):
            continue
        assert (h["oracle_minus"], h["oracle_plus"]) == (h["minus"], h["plus"])


def test_jump_examples():
    from krklr.characters import GradedChar, jump
    from krklr.trivial import jump_phi_check
    assert jump(closed_form_char("A1", 2, (0, 1)), 2) == 2
    assert jump(closed_form_char("A2even", 2, (1, 0)), 0) == 1
    D = build_b11("B1", 3).datum
    for i in D.I:
        for j in D.I:
            want = 0 if i == j else -D.a[j][i]
            assert jump(GradedChar.word(D, (i,)), j) == want
    rep = jump_phi_check("A2odd", 3, 6)
    assert rep["ok"] and rep["counts"]["jump = table ok"] > 0
