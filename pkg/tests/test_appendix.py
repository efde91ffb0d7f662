from krklr.appendix import (EXPECTED_JUMPS, B2_ARROWS, THICK, build_catalog, table_rows,
                            verify_catalog, verify_jump_table, verify_thick_arrows)
from krklr.characters import GradedChar, LaurentPoly, qfact, qshuffle


def test_catalog_shape():
    D, cat = build_catalog()
    assert [e.num for e in cat] == list(range(1, 17))
    assert len(B2_ARROWS) == 18 and len(THICK) == 6


def test_frozen_characters():
    D, cat = build_catalog()
    by = {e.num: e.char for e in cat}
    # L(hii) = [2]_i! [h,i,i]
    assert by[8] == GradedChar.word(D, (0, 1, 1), qfact(2, D.d[1]))
    assert by[10].same(GradedChar.word(D, (0, 1, 1, 0), LaurentPoly({0: 1, 2: 1})))
    assert by[7] == qshuffle(by[4], GradedChar.word(D, (0,)))


def test_jumps():
    rows = verify_jump_table()
    assert all(r[4] for r in rows)
    assert {r[0]: r[2] for r in rows} == EXPECTED_JUMPS


def test_arrows_and_catalog():
    assert all(a[4] for a in verify_thick_arrows())
    res = verify_catalog()
    assert res.pop("max_depth") == 7
    assert all(res.values()), res


def test_rows_for_cli():
    rows = table_rows()
    assert rows[6]["name"].startswith("ind L(ih)")
    assert (rows[6]["jump_i"], rows[6]["jump_h"]) == (3, 0)
