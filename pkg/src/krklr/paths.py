"""Walks on B^{1,1}, extension sets, arrow classes, cyclotomic paths and the
phi-hat formulas together with their extension-count oracle."""
from itertools import product

from .kr import build_b11


class NoWalk(Exception):
    pass


# arrow classes per family: (class A colors, class B colors, D pairs)
def class_table(family, ell):
    rng = lambda a, b: set(range(a, b + 1))
    if family in ("A1", "C1"):
        return rng(0, ell), set(), []
    if family == "A2even":
        return rng(1, ell), {0}, []
    if family == "A2dag":
        return rng(0, ell - 1), {ell}, []
    if family == "D2":
        return rng(1, ell - 1), {0, ell}, []
    if family == "D1":
        return rng(2, ell - 2), set(), [(0, 1), (ell - 1, ell)]
    if family == "B1":
        return rng(2, ell - 1), {ell}, [(0, 1)]
    if family == "A2odd":
        return rng(2, ell), set(), [(0, 1)]
    raise ValueError(family)


FORBIDDEN = {("D2", 2): {1}, ("D1", 4): {2}, ("B1", 3): {2}}


class Classes:
    """Arrow classes for one type: kind[j] in {"A", "B", "D"}, partner[j] for D."""

    def __init__(self, kind, partner):
        self.kind = kind
        self.partner = partner

    def pairs(self):
        return sorted({tuple(sorted((j, k))) for j, k in self.partner.items()})

    def is_d_pair(self, a, b):
        return self.partner.get(a) == b

    def __eq__(self, other):
        return self.kind == other.kind and self.partner == other.partner


def derive_classes(B):
    """Classes read off the graph: B = adjacent same-colored arrows,
    D = the two steps of a bifurcation that closes up after two arrows."""
    D = B.datum
    kind = {j: "A" for j in D.I}
    partner = {}
    for s, c, t in B.arrows:
        if c in B.out[t]:
            kind[c] = "B"
    for x in B.nodes():
        outs = sorted(B.out[x].items())
        for (a, y1), (b, y2) in ((p, q) for p in outs for q in outs if p[0] < q[0]):
            z1 = B.out[y1].get(b)
            z2 = B.out[y2].get(a)
            if z1 is not None and z1 == z2:
                partner[a] = b
                partner[b] = a
    for j in partner:
        if kind[j] == "B":
            raise ValueError("color %d is both adjacent and bifurcating" % j)
        kind[j] = "D"
    return Classes(kind, partner)


def table_classes(family, ell):
    A, Bset, pairs = class_table(family, ell)
    kind = {}
    for j in A:
        kind[j] = "A"
    for j in Bset:
        kind[j] = "B"
    partner = {}
    for a, b in pairs:
        kind[a] = kind[b] = "D"
        partner[a], partner[b] = b, a
    return Classes(kind, partner)


def classify(family, rank=None):
    """Tabulated classes, cross-checked against the graph (raises on mismatch)."""
    B = build_b11(family, rank)
    derived = derive_classes(B)
    table = table_classes(family, B.datum.rank)
    if derived != table:
        raise ValueError("derived classes %r differ from the table %r" % (derived.kind, table.kind))
    return table


class Path:
    def __init__(self, B, word, walks):
        self.B = B
        self.word = tuple(word)
        self.walks = walks

    def __len__(self):
        return len(self.word)

    @property
    def walk(self):
        if len(self.walks) != 1:
            raise NoWalk("walk not unique for %r" % (self.word,))
        return self.walks[0]

    def names(self, walk=None):
        w = self.walk if walk is None else walk
        return [self.B.labels[b] for b in w]


def walks(B, word):
    if not word:
        return [()]
    cur = [(b,) for b in B.nodes() if word[0] in B.out[b]]
    cur = [(b, B.out[b][word[0]]) for (b,) in cur]
    for c in word[1:]:
        cur = [w + (B.out[w[-1]][c],) for w in cur if c in B.out[w[-1]]]
    return cur


def realizable(B, word):
    return bool(walks(B, word))


def realize(B, word):
    ws = walks(B, word)
    if not ws:
        raise NoWalk("word %r has no walk" % (tuple(word),))
    if len(word) >= 2 and len(ws) != 1:
        raise NoWalk("word %r has %d walks" % (tuple(word), len(ws)))
    return Path(B, word, ws)


def extend_sets(B, word):
    """(E^-, E^+); for length-1 words the union over all walks."""
    ws = walks(B, word)
    em, ep = set(), set()
    for w in ws:
        em |= set(B.inn[w[0]])
        ep |= set(B.out[w[-1]])
    return em, ep


def tail_count(B, word, j):
    m = 0
    while realizable(B, (j,) * (m + 1) + tuple(word)):
        m += 1
    return m


def head_count(B, word, j):
    m = 0
    while realizable(B, tuple(word) + (j,) * (m + 1)):
        m += 1
    return m


def walk_is_cyclotomic(B, cls, word, walk, i1, i2):
    k = len(word)
    if k == 0 or word[0] != i2:
        return False
    start, end = walk[0], walk[-1]
    if k == 1:
        if i2 in B.out[end]:
            return False
        if any(cls.is_d_pair(i2, c) for c in B.out[end]):
            return False
    else:
        if word[1] == i2:
            return False
        if cls.is_d_pair(word[0], word[1]):
            return False
    if set(B.inn[start]) != {i1}:
        return False
    return B.eps(start)[i1] == 1


def cyclotomic_walks(B, cls, word, i1, i2):
    return [w for w in walks(B, word) if walk_is_cyclotomic(B, cls, word, w, i1, i2)]


def is_cyclotomic(B, cls, word, i1, i2):
    return bool(cyclotomic_walks(B, cls, word, i1, i2))


def all_words(B, k):
    """Every realizable word of length k, in lexicographic order."""
    if k == 0:
        return [()]
    res = set()
    frontier = {((c,), B.out[b][c]) for b in B.nodes() for c in B.out[b]}
    for _ in range(k - 1):
        frontier = {(w + (c,), B.out[x][c]) for w, x in frontier for c in B.out[x]}
    for w, _x in frontier:
        res.add(w)
    return sorted(res)


def forbidden(family, rank):
    return set(FORBIDDEN.get((family, rank), set()))


def cyclotomic_witnesses(B, cls, i, k):
    """All (j, word) with word cyclotomic of tail weight (Lambda_j, Lambda_i), length k."""
    D = B.datum
    out = []
    for w in all_words(B, k):
        if w[0] != i:
            continue
        for j in D.I:
            if is_cyclotomic(B, cls, w, j, i):
                out.append((j, w))
    return out


def cyclotomic_existence_check(family, rank, maxlen):
    """{i: first length with no witness, or None}; forbidden indices must be exactly
    the ones with no witness at all."""
    B = build_b11(family, rank)
    cls = classify(family, rank)
    D = B.datum
    # extend word lists incrementally: every cyclotomic word starts at one of few nodes
    missing = {}
    for i in D.I:
        missing[i] = None
        for k in range(1, maxlen + 1):
            if not _has_witness(B, cls, i, k):
                missing[i] = k
                break
    return missing


def _has_witness(B, cls, i, k):
    # walks are determined by their start node and word; grow from i-arrows
    for s in B.nodes():
        if i not in B.out[s]:
            continue
        starts = list(B.inn[s])
        if len(starts) != 1:
            continue
        j = starts[0]
        if B.eps(s)[j] != 1:
            continue
        stack = [((i,), (s, B.out[s][i]))]
        while stack:
            w, walk = stack.pop()
            if len(w) == k:
                if walk_is_cyclotomic(B, cls, w, walk, j, i):
                    return True
                continue
            for c, t in B.out[walk[-1]].items():
                stack.append((w + (c,), walk + (t,)))
    return False


def enumerate_cyclotomic(family, rank, maxlen):
    """Yield dicts describing each cyclotomic (word, tail weight) up to maxlen."""
    B = build_b11(family, rank)
    cls = classify(family, rank)
    D = B.datum
    for k in range(1, maxlen + 1):
        for w in all_words(B, k):
            for j in D.I:
                for walk in cyclotomic_walks(B, cls, w, j, w[0]):
                    yield {"word": list(w), "tail": [j, w[0]],
                           "walk": [B.labels[b] for b in walk]}


def enumerate_paths(family, rank, maxlen):
    B = build_b11(family, rank)
    for k in range(1, maxlen + 1):
        for w in all_words(B, k):
            ws = walks(B, w)
            yield {"word": list(w), "walks": [[B.labels[b] for b in x] for x in ws]}


# ---- phi-hat -----------------------------------------------------------

def _delta(b):
    return 1 if b else 0


def table_jump(cls, word, em, ep, j):
    k = len(word)
    dm, dp = _delta(j in em), _delta(j in ep)
    if cls.kind[j] == "B":
        return dm * (2 - _delta(j == word[0])) + dp * (2 - _delta(j == word[k - 1]))
    return dm + dp


def table_split(cls, word, em, ep, j):
    """(phi_hat^-, phi_hat^+) from the per-class formulas."""
    k = len(word)
    dm, dp = _delta(j in em), _delta(j in ep)
    kind = cls.kind[j]
    if kind == "A":
        return dm, dp
    if kind == "B":
        return 2 * dm - _delta(j == word[0]), dp * (2 - _delta(j == word[k - 1]))
    jp = cls.partner[j]
    return dm + (dm - 1) * _delta(jp == word[0]), dp


def phi_hat(B, cls, word):
    """Per color: formula split, formula total and oracle split."""
    em, ep = extend_sets(B, word)
    res = {}
    for j in B.datum.I:
        mi, pl = table_split(cls, word, em, ep, j)
        res[j] = {
            "minus": mi, "plus": pl, "total": mi + pl,
            "jump": table_jump(cls, word, em, ep, j),
            "oracle_minus": tail_count(B, word, j),
            "oracle_plus": head_count(B, word, j),
        }
    return res


def is_exception(cls, word, j):
    """The D-class case p(0) = j', p(1) = j where the minus formula gives -1."""
    return cls.kind[j] == "D" and len(word) >= 2 and word[0] == cls.partner[j] and word[1] == j


def d_equivalent(cls, w1, w2):
    """True if w2 is obtained from w1 by swapping adjacent D-pair letters."""
    if len(w1) != len(w2):
        return False
    seen = {tuple(w1)}
    stack = [tuple(w1)]
    while stack:
        w = stack.pop()
        if w == tuple(w2):
            return True
        for r in range(len(w) - 1):
            if cls.is_d_pair(w[r], w[r + 1]):
                v = w[:r] + (w[r + 1], w[r]) + w[r + 2:]
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return False
