"""The modules T(p,k): explicit bases, integer action matrices, relation checks."""
from itertools import product

import numpy as np

from .characters import GradedChar, LaurentPoly, ONE, etilde_top_char, eps, eps_check, in_rep
from .kr import build_b11, build_bl1_typeA
from .paths import classify, realizable


class RelationFailure(AssertionError):
    pass


# marker kinds per family: nil pairs carry a dot, swap pairs a crossing
def marker_pairs(family, ell):
    nil, swap = set(), set()
    if family == "A2even":
        nil = {(0, 0)}
    elif family == "A2dag":
        nil = {(ell, ell)}
    elif family == "D2":
        nil = {(0, 0), (ell, ell)}
    elif family == "B1":
        nil = {(ell, ell)}
        swap = {(0, 1), (1, 0)}
    elif family == "A2odd":
        swap = {(0, 1), (1, 0)}
    elif family == "D1":
        swap = {(0, 1), (1, 0), (ell - 1, ell), (ell, ell - 1)}
    return nil, swap


def adjacency(word, j1, j2):
    """A_{j1,j2}: positions t (1-based, 1 <= t <= k-1) with p(t-1)=j1, p(t)=j2."""
    return [t for t in range(1, len(word)) if word[t - 1] == j1 and word[t] == j2]


class TrivModule:
    def __init__(self, datum, word, nil, swap, family=None):
        self.datum = datum
        self.word = tuple(word)
        self.k = len(word)
        self.family = family
        self.nil = sorted(nil)
        self.swap = sorted(swap)
        marks = sorted(self.nil + self.swap)
        for a, b in zip(marks, marks[1:]):
            if b - a < 2:
                raise RelationFailure("markers %d and %d overlap in %r" % (a, b, self.word))
        self.markers = marks
        self.basis = list(product((0, 1), repeat=len(marks)))
        self.pos = {b: n for n, b in enumerate(self.basis)}
        self.dim = len(self.basis)
        self.words, self.deg = [], []
        for beta in self.basis:
            w = list(self.word)
            dg = 0
            for t, bit in zip(marks, beta):
                if not bit:
                    continue
                if t in self.swap:
                    w[t - 1], w[t] = w[t], w[t - 1]
                else:
                    j = self.word[t - 1]
                    dg += datum.bilinear(j, j)
            self.words.append(tuple(w))
            self.deg.append(dg)
        self._build_ops()

    def _zero(self):
        return np.zeros((self.dim, self.dim), dtype=np.int64)

    def _build_ops(self):
        k = self.k
        self.x = {r: self._zero() for r in range(1, k + 1)}
        self.psi = {r: self._zero() for r in range(1, k)}
        for m, t in enumerate(self.markers):
            for beta in self.basis:
                src = self.pos[beta]
                flip = list(beta)
                flip[m] = 1 - flip[m]
                dst = self.pos[tuple(flip)]
                if t in self.swap:
                    self.psi[t][dst, src] = 1
                elif beta[m] == 0:
                    self.x[t][dst, src] = 1
                    self.x[t + 1][dst, src] = -1
                    self.psi[t][src, dst] = 1

    def idempotent(self, w):
        m = self._zero()
        for n, ww in enumerate(self.words):
            if ww == tuple(w):
                m[n, n] = 1
        return m

    def char(self):
        terms = {}
        for w, dg in zip(self.words, self.deg):
            p = LaurentPoly.mono(dg)
            terms[w] = terms[w] + p if w in terms else p
        return GradedChar(self.datum, terms)

    def summary(self):
        return {"word": list(self.word), "dim": self.dim, "nil": self.nil, "swap": self.swap}


def build_T(family, rank, word):
    """T(p,k) for a realizable word; the empty word gives the unit module."""
    B = build_b11(family, rank)
    word = tuple(word)
    if word and not realizable(B, word):
        raise ValueError("word %r is not realizable" % (word,))
    nil_p, swap_p = marker_pairs(family, B.datum.rank)
    nil = [t for t in range(1, len(word)) if (word[t - 1], word[t]) in nil_p]
    swap = [t for t in range(1, len(word)) if (word[t - 1], word[t]) in swap_p]
    # consecutive equal letters only ever come from the nil pairs
    for t in range(1, len(word)):
        if word[t - 1] == word[t] and t not in nil:
            raise RelationFailure("repeated letter outside a nil marker in %r" % (word,))
    return TrivModule(B.datum, word, nil, swap, family)


def build_S_typeA(rank, word):
    """S(p,k) for a path in B^{l,1} of type A^(1)_l; one-dimensional."""
    B = build_bl1_typeA(rank)
    if word and not realizable(B, tuple(word)):
        raise ValueError("word %r is not realizable in B^{l,1}" % (tuple(word),))
    return TrivModule(B.datum, word, [], [], "A1")


def closed_form_char(family, rank, word):
    """The character formula for T(p,k), written independently of the module."""
    from .cartan import build_cartan
    D = build_cartan(family, rank)
    ell = D.rank
    word = tuple(word)
    if family in ("A1", "C1"):
        return GradedChar.word(D, word)
    nil_p, swap_p = marker_pairs(family, ell)
    pref = ONE
    for j1, j2 in sorted(nil_p):
        for _ in adjacency(word, j1, j2):
            pref = pref * LaurentPoly({0: 1, 2 * D.d[j1]: 1})
    swaps = []
    for j1, j2 in sorted(swap_p):
        swaps += adjacency(word, j1, j2)
    terms = {}
    for bits in product((0, 1), repeat=len(swaps)):
        w = list(word)
        for t, bit in zip(sorted(swaps), bits):
            if bit:
                w[t - 1], w[t] = w[t], w[t - 1]
        w = tuple(w)
        terms[w] = terms[w] + pref if w in terms else pref
    return GradedChar(D, terms)


def _pow(m, e):
    return np.linalg.matrix_power(m, e) if e > 0 else np.eye(m.shape[0], dtype=np.int64)


def verify_relations(m):
    """List of failed relation instances (empty when all hold)."""
    D = m.datum
    k, dim = m.k, m.dim
    errs = []
    words = m.words
    I = np.eye(dim, dtype=np.int64)

    # idempotents: orthogonal, summing to the identity
    tot = m._zero()
    for w in sorted(set(words)):
        e = m.idempotent(w)
        if not np.array_equal(e @ e, e):
            errs.append("idempotent %r not idempotent" % (w,))
        tot += e
    if not np.array_equal(tot, I):
        errs.append("idempotents do not sum to 1")

    def sr(w, r):
        w = list(w)
        w[r - 1], w[r] = w[r], w[r - 1]
        return tuple(w)

    for r in range(1, k + 1):
        X = m.x[r]
        for a, b in zip(*np.nonzero(X)):
            if words[a] != words[b]:
                errs.append("x_%d does not preserve weight spaces" % r)
            ir = words[b][r - 1]
            if m.deg[a] - m.deg[b] != D.bilinear(ir, ir):
                errs.append("x_%d has the wrong degree" % r)
        if np.any(_pow(X, dim + 1)):
            errs.append("x_%d not nilpotent" % r)
        for t in range(r + 1, k + 1):
            if not np.array_equal(X @ m.x[t], m.x[t] @ X):
                errs.append("x_%d x_%d != x_%d x_%d" % (r, t, t, r))
    for r in range(1, k):
        P = m.psi[r]
        for a, b in zip(*np.nonzero(P)):
            if words[a] != sr(words[b], r):
                errs.append("psi_%d 1_i != 1_{s i} psi_%d" % (r, r))
            i1, i2 = words[b][r - 1], words[b][r]
            if m.deg[a] - m.deg[b] != -D.bilinear(i1, i2):
                errs.append("psi_%d has the wrong degree" % r)
        for t in range(r + 2, k):
            if not np.array_equal(P @ m.psi[t], m.psi[t] @ P):
                errs.append("psi_%d psi_%d != psi_%d psi_%d" % (r, t, t, r))
        # quadratic relation, column by column
        lhs = P @ P
        rhs = m._zero()
        for v in range(dim):
            i1, i2 = words[v][r - 1], words[v][r]
            if i1 == i2:
                continue
            if D.bilinear(i1, i2) == 0:
                rhs[v, v] = 1
            else:
                col = (_pow(m.x[r], -D.a[i1][i2]) + _pow(m.x[r + 1], -D.a[i2][i1]))[:, v]
                rhs[:, v] = col
        if not np.array_equal(lhs, rhs):
            errs.append("psi_%d^2 relation" % r)
        # dots sliding through a crossing
        for t in range(1, k + 1):
            st = r + 1 if t == r else r if t == r + 1 else t
            lhs = P @ m.x[t] - m.x[st] @ P
            rhs = m._zero()
            for v in range(dim):
                if words[v][r - 1] == words[v][r]:
                    if t == r:
                        rhs[v, v] = 1
                    elif t == r + 1:
                        rhs[v, v] = -1
            if not np.array_equal(lhs, rhs):
                errs.append("psi_%d x_%d - x_%d psi_%d relation" % (r, t, st, r))
    for r in range(1, k - 1):
        P, Q = m.psi[r], m.psi[r + 1]
        lhs = P @ Q @ P - Q @ P @ Q
        rhs = m._zero()
        for v in range(dim):
            w = words[v]
            if w[r - 1] != w[r + 1]:
                continue
            a = D.a[w[r - 1]][w[r]]
            col = np.zeros(dim, dtype=np.int64)
            for t in range(0, -a):
                col = col + (_pow(m.x[r], t) @ _pow(m.x[r + 2], -a - 1 - t))[:, v]
            rhs[:, v] = col
        if not np.array_equal(lhs, rhs):
            errs.append("braid relation at %d" % r)
    return errs


def char_T(family, rank, word):
    return build_T(family, rank, word).char()


def building_T_check(family, rank, word):
    """Strip the top letter eps-many times; each stage must be a shorter T."""
    word = tuple(word)
    steps = []
    cur = char_T(family, rank, word)
    k = len(word)
    while k > 0:
        i = word[k - 1]
        top, mm = etilde_top_char(cur, i)
        if mm not in (1, 2):
            return False, "eps_%d = %d at length %d" % (i, mm, k)
        k -= mm
        want = closed_form_char(family, rank, word[:k])
        if not top.same(want):
            return False, "strip of %d at length %d does not give T(p,%d)" % (i, k + mm, k)
        steps.append((i, mm))
        cur = top
    return True, steps


def triv_rep_check(family, rank, word):
    c = char_T(family, rank, word)
    lam = c.datum.fundamental(word[0])
    return in_rep(c, lam)


def jump_phi_check(family, rank, maxlen):
    """The phi-hat table sweep for one type; returns the suite report dict."""
    from .suites import tables_suite
    return tables_suite([(family, rank)], maxlen=maxlen).as_dict()
