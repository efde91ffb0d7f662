from math import comb

import pytest
from hypothesis import given, strategies as st

from krklr.cartan import appendix_datum, build_cartan
from krklr.characters import (GradedChar, LaurentPoly, NotDivisible, char_Lcal, char_Lin,
                              divided_power, eps, eps_check, in_rep, jump, qfact, qint,
                              qshuffle, serre_all, shuffle_oracle, shuffle_words)


def P(d):
    return LaurentPoly(d)


def test_qnumbers():
    assert qint(3) == P({-2: 1, 0: 1, 2: 1})
    assert qfact(2, 2) == P({-2: 1, 2: 1})
    assert qfact(3) == P({-3: 1, -1: 2, 1: 2, 3: 1})


def test_divide():
    assert (qint(3) * qint(2)).divide(qint(2)) == qint(3)
    with pytest.raises(NotDivisible):
        qint(3).divide(qint(2))


D = build_cartan("A2even", 2)


def test_square_of_a_letter():
    one = GradedChar.word(D, (1,))
    assert qshuffle(one, one).same(GradedChar.word(D, (1, 1), qint(2, D.d[1])))
    assert qshuffle(one, one).same(char_Lin(D, 1, 2))


def test_commuting_letters():
    E = build_cartan("A1", 3)
    got = qshuffle(GradedChar.word(E, (0,)), GradedChar.word(E, (2,)))
    assert got == GradedChar(E, {(0, 2): P({0: 1}), (2, 0): P({0: 1})})


def test_text_format():
    c = GradedChar.word(D, (0, 0), P({1: 1, 3: 1}))
    assert c.to_text() == "0 0 : 1:0 1:2"


def test_divided_power_inverts():
    for n in range(1, 4):
        assert divided_power(char_Lin(D, 2, n), 2, n) == GradedChar.unit(D)


def test_eps_and_membership():
    c = GradedChar.word(D, (0, 1, 1))
    assert eps(c, 1) == 2 and eps_check(c, 0) == 1
    assert in_rep(c, (1, 0, 0)) and not in_rep(c, (0, 1, 0))


def test_jump_anchor_typeA():
    for r in (2, 3):
        E = build_cartan("A1", r)
        assert jump(GradedChar.word(E, (0,)), 1) == 1


def test_jump_anchor_rank2():
    A = appendix_datum()
    for i, j in ((0, 1), (1, 0)):
        for c in range(-A.a[i][j] + 1):
            for n in range(c + 1):
                ch = char_Lcal(A, i, j, c, n)
                assert jump(ch, i) == -A.a[i][j] - c
                assert serre_all(ch)
    with pytest.raises(ValueError):
        char_Lcal(A, 0, 1, 2, 0)


letters = st.lists(st.integers(0, 2), max_size=4)


@given(letters, letters)
def test_shuffle_dp_matches_brute_force(u, w):
    assert shuffle_words(D, u, w) == shuffle_oracle(D, u, w)


@given(letters, letters)
def test_shuffle_counts_at_q1(u, w):
    total = sum(p.at_one() for p in shuffle_words(D, u, w).values())
    assert total == comb(len(u) + len(w), len(u))


@given(letters, letters, letters)
def test_shuffle_associative(a, b, c):
    x, y, z = (GradedChar.word(D, t) for t in (a, b, c))
    assert qshuffle(qshuffle(x, y), z) == qshuffle(x, qshuffle(y, z))


@given(st.integers(0, 2), st.integers(1, 4))
def test_divided_powers_are_simple(i, n):
    c = char_Lin(D, i, n)
    assert eps(c, i) == n and serre_all(c)
