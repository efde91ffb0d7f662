"""The B^{1,1} crystals of the eight families, transcribed arrow by arrow.

eps/phi are not stored; they are read off from string lengths, which doubles
as a check on the transcription (C1 must then hold with wt = phi - eps).
"""
import json

from .cartan import build_cartan
from .crystal import CrystalGraph, CrystalError, string_lengths, vsub


def bar(m):
    return "%d̄" % m


TOP = "∅"


class NotPerfect(Exception):
    pass


class KRCrystal:
    def __init__(self, datum, labels, arrows):
        self.datum = datum
        self.labels = list(labels)
        self.id = {lab: k for k, lab in enumerate(self.labels)}
        if len(self.id) != len(self.labels):
            raise CrystalError("duplicate node label")
        n = len(self.labels)
        self.out = [dict() for _ in range(n)]
        self.inn = [dict() for _ in range(n)]
        self.arrows = []
        for s, c, t in arrows:
            a, b = self.id[s], self.id[t]
            if c in self.out[a] or c in self.inn[b]:
                raise CrystalError("two %d-arrows at %s -> %s" % (c, s, t))
            self.out[a][c] = b
            self.inn[b][c] = a
            self.arrows.append((a, c, b))
        self._eps, self._phi, self._wt = [], [], []
        for b in range(n):
            e, p = [], []
            for i in datum.I:
                x, y = string_lengths(self.out, self.inn, b, i)
                e.append(x)
                p.append(y)
            self._eps.append(tuple(e))
            self._phi.append(tuple(p))
            self._wt.append(vsub(p, e))

    def __len__(self):
        return len(self.labels)

    def nodes(self):
        return range(len(self.labels))

    def eps(self, b):
        return self._eps[b]

    def phi(self, b):
        return self._phi[b]

    def wt(self, b):
        return self._wt[b]

    def f(self, b, i):
        return self.out[b].get(i)

    def e(self, b, i):
        return self.inn[b].get(i)

    def node_name(self, b):
        return self.labels[b]

    def reversed(self):
        arrows = [(self.labels[t], c, self.labels[s]) for s, c, t in self.arrows]
        return KRCrystal(self.datum, self.labels, arrows)

    def as_graph(self):
        g = CrystalGraph(self.datum)
        for b in self.nodes():
            g.add_node(self._wt[b], self._eps[b], self._phi[b], label=self.labels[b])
        for s, c, t in self.arrows:
            g.add_edge(s, c, t)
        return g

    def to_dict(self):
        nodes = [{"id": self.labels[b], "wt": list(self._wt[b]), "eps": list(self._eps[b]),
                  "phi": list(self._phi[b]), "depth": 0, "nu": [0] * self.datum.n}
                 for b in self.nodes()]
        edges = [{"src": self.labels[s], "color": c, "dst": self.labels[t]}
                 for s, c, t in sorted(self.arrows)]
        return {"nodes": nodes, "edges": edges}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    def to_dot(self, name="B11"):
        g = self.as_graph()
        return g.to_dot(name)


def _chain_up(ell_top, first_color=1):
    """Arrows "k" -> "k+1" colored k for k = first_color..ell_top-1."""
    return [(str(k), k, str(k + 1)) for k in range(first_color, ell_top)]


def _bar_down(ell_top):
    """Arrows bar(m) -> bar(m-1) colored m-1 for m = ell_top..2."""
    return [(bar(m), m - 1, bar(m - 1)) for m in range(ell_top, 1, -1)]


def _b11_arrows(family, ell):
    ups = [str(k) for k in range(1, ell + 1)]
    downs = [bar(m) for m in range(ell, 0, -1)]
    if family == "A1":
        labels = [str(k) for k in range(ell + 1)]
        arrows = [(str(k), k + 1, str(k + 1)) for k in range(ell)] + [(str(ell), 0, "0")]
        return labels, arrows
    if family == "C1":
        labels = [str(k) for k in range(ell + 1)] + [bar(m) for m in range(ell - 1, 0, -1)]
        arrows = [(str(k), k + 1, str(k + 1)) for k in range(ell)]
        arrows.append((str(ell), ell - 1, bar(ell - 1)))
        arrows += _bar_down(ell - 1)
        arrows.append((bar(1), 0, "0"))
        return labels, arrows
    if family == "A2even":
        labels = ups + downs + [TOP]
        arrows = _chain_up(ell) + [(str(ell), ell, bar(ell))] + _bar_down(ell)
        arrows += [(bar(1), 0, TOP), (TOP, 0, "1")]
        return labels, arrows
    if family in ("A2dag", "D2"):
        labels = ups + ["0"] + downs
        arrows = _chain_up(ell) + [(str(ell), ell, "0"), ("0", ell, bar(ell))] + _bar_down(ell)
        if family == "A2dag":
            arrows.append((bar(1), 0, "1"))
        else:
            labels.append(TOP)
            arrows += [(bar(1), 0, TOP), (TOP, 0, "1")]
        return labels, arrows
    if family == "D1":
        labels = [str(k) for k in range(1, ell + 1)] + downs
        arrows = _chain_up(ell - 1)
        arrows += [(str(ell - 1), ell - 1, str(ell)), (str(ell - 1), ell, bar(ell)),
                   (str(ell), ell, bar(ell - 1)), (bar(ell), ell - 1, bar(ell - 1))]
        arrows += _bar_down(ell - 1)
        arrows += [(bar(1), 0, "2"), (bar(2), 0, "1")]
        return labels, arrows
    if family == "B1":
        labels = ups + ["0"] + downs
        arrows = _chain_up(ell) + [(str(ell), ell, "0"), ("0", ell, bar(ell))] + _bar_down(ell)
        arrows += [(bar(1), 0, "2"), (bar(2), 0, "1")]
        return labels, arrows
    if family == "A2odd":
        labels = ups + downs
        arrows = _chain_up(ell) + [(str(ell), ell, bar(ell))] + _bar_down(ell)
        arrows += [(bar(1), 0, "2"), (bar(2), 0, "1")]
        return labels, arrows
    raise CrystalError("no B^{1,1} for %r" % family)


_KR = {}


def build_b11(family, rank=None):
    D = build_cartan(family, rank)
    key = (family, D.rank)
    if key not in _KR:
        labels, arrows = _b11_arrows(family, D.rank)
        _KR[key] = KRCrystal(D, labels, arrows)
    return _KR[key]


def build_bl1_typeA(rank):
    """B^{l,1} in type A^(1)_l: every arrow of B^{1,1} reversed."""
    return build_b11("A1", rank).reversed()


def perfect_data(family, rank=None):
    """{i: (b_i, sigma(i))} for the level-1 indices of a perfect type."""
    B = build_b11(family, rank)
    D = B.datum
    if family == "C1":
        raise NotPerfect("B^{1,1} of type C^(1) is not perfect")
    res = {}
    for i in D.level_one():
        hits = [b for b in B.nodes() if B.eps(b) == D.unit(i)]
        if len(hits) != 1:
            raise NotPerfect("%d nodes with eps = Lambda_%d" % (len(hits), i))
        b = hits[0]
        phi = B.phi(b)
        tgt = [j for j in D.I if phi[j]]
        if sum(phi) != 1:
            raise NotPerfect("phi(b_%d) is not a fundamental weight" % i)
        res[i] = (b, tgt[0])
    return res


def seeds(B):
    """All (b, s, t) with eps(b) = Lambda_s, phi(b) = Lambda_t, both level 1."""
    D = B.datum
    out = []
    for b in B.nodes():
        e, p = B.eps(b), B.phi(b)
        if sum(e) == 1 and sum(p) == 1:
            s, t = e.index(1), p.index(1)
            if D.levels[s] == 1 and D.levels[t] == 1:
                out.append((b, s, t))
    return out


def structural_check(B):
    """Walk-uniqueness conditions, level-0 weights and C1-C4."""
    from .crystal import axiom_check
    D = B.datum
    errs = []
    # one arrow per color at each node: the constructor enforces it, recheck anyway
    for b in B.nodes():
        if len(set(B.out[b])) != len(B.out[b]):
            errs.append("two equal out-colors at %s" % B.labels[b])
    for i in D.I:
        cnt = sum(1 for s, c, t in B.arrows if c == i)
        if cnt > 2:
            errs.append("%d arrows of color %d" % (cnt, i))
        if cnt == 0:
            errs.append("no arrow of color %d" % i)
    for i in D.I:
        # sources of i-arrows sharing an outgoing color would make walks ambiguous
        tails = [t for s, c, t in B.arrows if c == i]
        heads = [s for s, c, t in B.arrows if c == i]
        for grp, side in ((tails, "out"), (heads, "in")):
            for x in range(len(grp)):
                for y in range(x + 1, len(grp)):
                    cx = set((B.out if side == "out" else B.inn)[grp[x]])
                    cy = set((B.out if side == "out" else B.inn)[grp[y]])
                    if cx & cy:
                        errs.append("ambiguous walks: color %d, shared %s-colors %s" % (i, side, sorted(cx & cy)))
    for b in B.nodes():
        lev = sum(D.c[i] * (B.phi(b)[i] - B.eps(b)[i]) for i in D.I)
        if lev != 0:
            errs.append("level-0 identity fails at %s" % B.labels[b])
    errs += axiom_check(B.as_graph())
    return errs
