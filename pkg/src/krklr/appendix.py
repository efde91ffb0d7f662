"""Rank-2 catalog: sixteen simples in rep(Lambda_h + Lambda_i) for the
datum with a_hi = -1, a_ih = -2 (index 0 is h, index 1 is i)."""
from .cartan import appendix_datum
from .characters import (GradedChar, LaurentPoly, char_Lcal, eps, eps_check, in_rep, jump,
                         phi_lambda, qshuffle, serre_all)

H, I_ = 0, 1

# (source, color, target); colors use the internal indices above
B2_ARROWS = [
    (1, I_, 2), (1, H, 3), (3, I_, 5), (2, H, 4), (5, I_, 8), (4, H, 7), (4, I_, 6),
    (6, H, 9), (8, H, 10), (10, I_, 13), (8, I_, 11), (9, I_, 12), (11, H, 13), (7, I_, 9),
    (13, H, 15), (12, I_, 14), (15, I_, 16), (14, H, 16),
]

THICK = {(1, I_, 2), (1, H, 3), (4, H, 7), (6, H, 9), (10, I_, 13), (8, I_, 11)}

# expected (jump_i, jump_h) per catalog entry, in catalog order
EXPECTED_JUMPS = {
    1: (0, 0), 2: (0, 1), 3: (2, 0), 4: (1, 0), 5: (1, 0), 6: (0, 0), 7: (3, 0), 8: (0, 1),
    9: (2, 0), 10: (0, 0), 11: (0, 2), 12: (1, 0), 13: (0, 1), 14: (0, 1), 15: (1, 0), 16: (0, 0),
}


class CatalogEntry:
    def __init__(self, num, name, char):
        self.num = num
        self.name = name
        self.char = char

    def jumps(self):
        if self.num == 1:
            return 0, 0
        return jump(self.char, I_), jump(self.char, H)


def build_catalog():
    D = appendix_datum()
    w = lambda *letters: GradedChar.word(D, letters)
    unit = GradedChar.unit(D)
    Li, Lh = w(I_), w(H)
    Lih = char_Lcal(D, I_, H, 1, 0)
    Lhi = char_Lcal(D, I_, H, 1, 1)
    Lihi = char_Lcal(D, I_, H, 2, 1)
    Lhii = char_Lcal(D, I_, H, 2, 2)
    # no closed formula for this one; its character is fixed input
    X10 = GradedChar.word(D, (H, I_, I_, H), LaurentPoly({0: 1, 2 * D.d[I_]: 1}))
    rows = [
        (1, "1", unit),
        (2, "L(i)", Li),
        (3, "L(h)", Lh),
        (4, "L(ih)", Lih),
        (5, "L(hi)", Lhi),
        (6, "L(ihi)", Lihi),
        (7, "ind L(ih)⊠L(h)", qshuffle(Lih, Lh)),
        (8, "L(hii)", Lhii),
        (9, "ind L(ihi)⊠L(h)", qshuffle(Lihi, Lh)),
        (10, "f̃_h L(hii)", X10),
        (11, "ind L(hii)⊠L(i)", qshuffle(Lhii, Li)),
        (12, "ind L(ihi)⊠L(hi)", qshuffle(Lihi, Lhi)),
        (13, "ind f̃_h L(hii)⊠L(i)", qshuffle(X10, Li)),
        (14, "ind L(ihi)⊠L(hii)", qshuffle(Lihi, Lhii)),
        (15, "ind f̃_h L(hii)⊠L(ih)", qshuffle(X10, Lih)),
        (16, "ind f̃_h L(hii)⊠L(ihi)", qshuffle(X10, Lihi)),
    ]
    return D, [CatalogEntry(n, name, c) for n, name, c in rows]


def _eps_safe(c, j):
    return 0 if not any(c.t) or c.t.keys() == {()} else eps(c, j)


def verify_jump_table(catalog=None):
    D, cat = catalog or build_catalog()
    rows = []
    for e in cat:
        got = e.jumps()
        rows.append((e.num, e.name, got, EXPECTED_JUMPS[e.num], got == EXPECTED_JUMPS[e.num]))
    return rows


def verify_thick_arrows(catalog=None):
    D, cat = catalog or build_catalog()
    by = {e.num: e for e in cat}
    rows = []
    for s, j, t in B2_ARROWS:
        src, dst = by[s].char, by[t].char
        eps_s = _eps_safe(src, j)
        eps_t = _eps_safe(dst, j)
        if (s, j, t) in THICK:
            jmp = 0 if s == 1 else jump(src, j)
            ok = jmp == 0 and qshuffle(src, GradedChar.word(D, (j,))).same(dst)
            kind = "thick"
        else:
            ok = eps_t == eps_s + 1
            kind = "plain"
        rows.append((s, j, t, kind, ok))
    return rows


def verify_catalog(catalog=None):
    """Membership, Serre, phi >= 0, maximal depth and string lengths vs B2_ARROWS."""
    D, cat = catalog or build_catalog()
    lam = (1, 1)
    out = {}
    by = {e.num: e for e in cat}
    out["in_rep"] = all(e.num == 1 or in_rep(e.char, lam) for e in cat)
    out["serre"] = all(e.num == 1 or serre_all(e.char) for e in cat)
    out["phi_nonneg"] = all(e.num == 1 or min(phi_lambda(e.char, lam, j) for j in D.I) >= 0 for e in cat)
    depths = [sum(e.char.content()) for e in cat]
    out["max_depth"] = max(depths)
    out["content_bound"] = all(d <= 7 for d in depths)
    # string lengths read off the arrow list
    fout = {}
    fin = {}
    for s, j, t in B2_ARROWS:
        fout[(s, j)] = t
        fin[(t, j)] = s
    ok = True
    for e in cat:
        for j in D.I:
            p = 0
            x = e.num
            while (x, j) in fout:
                x = fout[(x, j)]
                p += 1
            m = 0
            x = e.num
            while (x, j) in fin:
                x = fin[(x, j)]
                m += 1
            if e.num == 1:
                ph, ep = lam[j], 0
            else:
                ph, ep = phi_lambda(e.char, lam, j), eps(e.char, j)
            if ph != p or ep != m:
                ok = False
    out["strings_match_arrows"] = ok
    # nothing can be added at the bottom: phi vanishes at the deepest node
    out["top_is_terminal"] = all(phi_lambda(by[16].char, lam, j) == 0 for j in D.I)
    # contents increase by one simple root along each arrow
    out["arrow_content"] = all(
        tuple(x - y for x, y in zip(_content(by[t]), _content(by[s]))) == tuple(1 if k == j else 0 for k in D.I)
        for s, j, t in B2_ARROWS)
    return out


def _content(e):
    c = e.char.content()
    return c if c is not None else (0, 0)


def table_rows(catalog=None):
    D, cat = catalog or build_catalog()
    jt = {r[0]: r for r in verify_jump_table((D, cat))}
    rows = []
    for e in cat:
        ji, jh = jt[e.num][2]
        rows.append({"n": e.num, "name": e.name, "char": _char_text(e.char),
                     "jump_i": ji, "jump_h": jh, "ok": jt[e.num][4]})
    return rows


def _char_text(c):
    parts = []
    for w, p in sorted(c.normal().t.items()):
        word = "".join("hi"[x] for x in w) or "∅"
        parts.append("(%s)[%s]" % (p, word))
    return " + ".join(parts)
