"""Crystal graphs: explicit (possibly truncated) graphs, lazy tensor products,
axiom checks, components and rooted colored isomorphism.

Every crystal-like object exposes ``datum``, ``eps(b)``, ``phi(b)``, ``wt(b)``,
``f(b, i)`` and ``e(b, i)``.  The operators return a node, ``None`` for zero,
or ``UNKNOWN`` when the answer lies past a truncation frontier.
"""
from collections import deque
import json


class _Unknown:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "UNKNOWN"


UNKNOWN = _Unknown()


class CrystalError(Exception):
    pass


def vadd(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vsub(u, v):
    return tuple(x - y for x, y in zip(u, v))


class CrystalGraph:
    """Explicit colored digraph with per-node data.

    ``open_`` holds, per node, the colors whose f-arrow was never explored.
    """

    def __init__(self, datum):
        self.datum = datum
        self.n_colors = datum.n
        self._wt, self._eps, self._phi = [], [], []
        self.depth, self.nu, self.label = [], [], []
        self.fout, self.fin = [], []
        self.open_ = []
        self.root = None
        self.index = {}

    # construction -----------------------------------------------------
    def add_node(self, wt, eps, phi, depth=0, nu=None, label=None):
        k = len(self._wt)
        self._wt.append(tuple(wt))
        self._eps.append(tuple(eps))
        self._phi.append(tuple(phi))
        self.depth.append(depth)
        self.nu.append(tuple(nu) if nu is not None else (0,) * self.n_colors)
        self.label.append(label)
        self.fout.append({})
        self.fin.append({})
        self.open_.append(set())
        if label is not None:
            self.index[label] = k
        return k

    def add_edge(self, src, color, dst):
        if color in self.fout[src] or color in self.fin[dst]:
            raise CrystalError("second %d-arrow at %r -> %r" % (color, src, dst))
        self.fout[src][color] = dst
        self.fin[dst][color] = src

    # crystal interface ------------------------------------------------
    def __len__(self):
        return len(self._wt)

    def nodes(self):
        return range(len(self._wt))

    def wt(self, b):
        return self._wt[b]

    def eps(self, b):
        return self._eps[b]

    def phi(self, b):
        return self._phi[b]

    def f(self, b, i):
        if i in self.fout[b]:
            return self.fout[b][i]
        if i in self.open_[b]:
            return UNKNOWN
        return None

    def e(self, b, i):
        if i in self.fin[b]:
            return self.fin[b][i]
        if self._eps[b][i] > 0:
            return UNKNOWN
        return None

    def edges(self):
        for s in self.nodes():
            for c in sorted(self.fout[s]):
                yield (s, c, self.fout[s][c])

    def trusted_depth(self):
        """All f-arrows are known from nodes strictly shallower than this."""
        bad = [self.depth[b] for b in self.nodes() if self.open_[b]]
        return min(bad) if bad else float("inf")

    def highest_weight_nodes(self):
        return [b for b in self.nodes() if not any(self._eps[b])]

    def node_name(self, b):
        lab = self.label[b]
        return str(b) if lab is None else str(lab)

    # export -----------------------------------------------------------
    def to_dict(self, max_depth=None):
        keep = [b for b in self.nodes() if max_depth is None or self.depth[b] <= max_depth]
        keep.sort(key=lambda b: (self.depth[b], b))
        ks = set(keep)
        nodes = [{"id": b, "wt": list(self._wt[b]), "eps": list(self._eps[b]),
                  "phi": list(self._phi[b]), "depth": self.depth[b], "nu": list(self.nu[b])}
                 for b in keep]
        edges = [{"src": s, "color": c, "dst": t} for s, c, t in self.edges() if s in ks and t in ks]
        return {"nodes": nodes, "edges": edges}

    def to_json(self, max_depth=None):
        return json.dumps(self.to_dict(max_depth), sort_keys=True)

    def to_dot(self, name="crystal", max_depth=None, labels=True):
        palette = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta",
                   "cyan", "gray", "olive"]
        keep = [b for b in self.nodes() if max_depth is None or self.depth[b] <= max_depth]
        keep.sort(key=lambda b: (self.depth[b], b))
        ks = set(keep)
        out = ["digraph %s {" % name]
        for b in keep:
            text = self.node_name(b) if labels else str(b)
            out.append('  n%d [label="%s\\nwt=%s"];' % (b, text, ",".join(map(str, self._wt[b]))))
        for s, c, t in self.edges():
            if s in ks and t in ks:
                col = palette[c % len(palette)]
                out.append('  n%d -> n%d [label="%d", color=%s];' % (s, t, c, col))
        out.append("}")
        return "\n".join(out) + "\n"

    @classmethod
    def from_dict(cls, datum, data):
        g = cls(datum)
        ids = {}
        for nd in sorted(data["nodes"], key=lambda x: x["id"]):
            ids[nd["id"]] = g.add_node(nd["wt"], nd["eps"], nd["phi"], nd["depth"], nd["nu"])
        for ed in data["edges"]:
            g.add_edge(ids[ed["src"]], ed["color"], ids[ed["dst"]])
        # a reloaded graph is only trusted strictly above its deepest layer
        top = max(g.depth) if g.depth else 0
        for b in g.nodes():
            if g.depth[b] == top:
                g.open_[b] = {i for i in range(g.n_colors) if g._phi[b][i] > 0}
        g.root = 0 if len(g) else None
        return g


def string_lengths(out, inn, b, i):
    """(eps_i, phi_i) of node b from the incoming/outgoing i-strings."""
    e = 0
    x = b
    while i in inn[x]:
        x = inn[x][i]
        e += 1
        if x == b:
            raise CrystalError("closed %d-string through %r" % (i, b))
    p = 0
    x = b
    while i in out[x]:
        x = out[x][i]
        p += 1
        if x == b:
            raise CrystalError("closed %d-string through %r" % (i, b))
    return e, p


class TensorProduct:
    """Lazy B1 (x) B2 in the reverse Kashiwara convention.

    eps_i(b1 b2) = max(eps_i(b2), eps_i(b1) - wt_i(b2)),
    e_i acts on b1 iff eps_i(b1) > phi_i(b2), f_i acts on b1 iff eps_i(b1) >= phi_i(b2).
    """

    def __init__(self, B1, B2):
        self.B1, self.B2 = B1, B2
        self.datum = B1.datum
        self.n_colors = B1.datum.n

    def wt(self, b):
        return vadd(self.B1.wt(b[0]), self.B2.wt(b[1]))

    def eps(self, b):
        e1, e2, w2 = self.B1.eps(b[0]), self.B2.eps(b[1]), self.B2.wt(b[1])
        return tuple(max(e2[i], e1[i] - w2[i]) for i in range(self.n_colors))

    def phi(self, b):
        p1, p2, w1 = self.B1.phi(b[0]), self.B2.phi(b[1]), self.B1.wt(b[0])
        return tuple(max(p2[i] + w1[i], p1[i]) for i in range(self.n_colors))

    def acts_on_first(self, b, i, raising):
        e1 = self.B1.eps(b[0])[i]
        p2 = self.B2.phi(b[1])[i]
        return e1 > p2 if raising else e1 >= p2

    def f(self, b, i):
        if self.acts_on_first(b, i, False):
            x = self.B1.f(b[0], i)
            return x if x is None or x is UNKNOWN else (x, b[1])
        y = self.B2.f(b[1], i)
        return y if y is None or y is UNKNOWN else (b[0], y)

    def e(self, b, i):
        if self.acts_on_first(b, i, True):
            x = self.B1.e(b[0], i)
            return x if x is None or x is UNKNOWN else (x, b[1])
        y = self.B2.e(b[1], i)
        return y if y is None or y is UNKNOWN else (b[0], y)


def tensor(B1, B2):
    return TensorProduct(B1, B2)


def explore(C, seed, max_depth, nu_of=None):
    """BFS along f-arrows from ``seed`` into a fresh CrystalGraph.

    Node ids follow BFS order with colors scanned increasingly, so the result
    is deterministic.  Nodes at ``max_depth`` (and nodes whose f lies past a
    frontier of C) get the corresponding colors marked open.
    """
    D = C.datum
    g = CrystalGraph(D)
    zero = (0,) * D.n
    g.add_node(C.wt(seed), C.eps(seed), C.phi(seed), 0, zero, label=seed)
    g.root = 0
    q = deque([0])
    while q:
        b = q.popleft()
        src = g.label[b]
        for i in D.I:
            if g._phi[b][i] == 0:
                t = C.f(src, i)
                if t is not None and t is not UNKNOWN:
                    raise CrystalError("f_%d nonzero although phi_%d = 0 at %r" % (i, i, src))
                continue
            if g.depth[b] >= max_depth:
                g.open_[b].add(i)
                continue
            t = C.f(src, i)
            if t is None:
                raise CrystalError("f_%d vanishes although phi_%d > 0 at %r" % (i, i, src))
            if t is UNKNOWN:
                g.open_[b].add(i)
                continue
            if t in g.index:
                k = g.index[t]
                if g.depth[k] != g.depth[b] + 1:
                    raise CrystalError("depth is not additive at %r" % (t,))
            else:
                nu = list(g.nu[b])
                nu[i] += 1
                k = g.add_node(C.wt(t), C.eps(t), C.phi(t), g.depth[b] + 1, nu, label=t)
                q.append(k)
            g.add_edge(b, i, k)
    return g


def axiom_check(C, nodes=None, full_strings=False):
    """Check C1-C4 on an explicit graph; returns a list of violation strings."""
    D = C.datum
    errs = []
    for b in (C.nodes() if nodes is None else nodes):
        w, e, p = C.wt(b), C.eps(b), C.phi(b)
        for i in D.I:
            if e[i] < 0 or p[i] < 0:
                errs.append("C1 %r: negative eps/phi" % (C.node_name(b),))
            if p[i] - e[i] != w[i]:
                errs.append("C1 %r color %d: phi-eps=%d wt=%d" % (C.node_name(b), i, p[i] - e[i], w[i]))
            t = C.f(b, i)
            if t is UNKNOWN:
                continue
            if t is None:
                if p[i] != 0:
                    errs.append("C4 %r: f_%d = 0 with phi>0" % (C.node_name(b), i))
                continue
            if C.e(t, i) != b:
                errs.append("C4 %r: e_%d f_%d != id" % (C.node_name(b), i, i))
            al = D.alpha_h(i)
            if C.wt(t) != vsub(w, al):
                errs.append("C2 %r color %d: weight step" % (C.node_name(b), i))
            if C.eps(t)[i] != e[i] + 1 or C.phi(t)[i] != p[i] - 1:
                errs.append("C3 %r color %d: eps/phi step" % (C.node_name(b), i))
        for i in D.I:
            s = C.e(b, i)
            if s is None and e[i] != 0:
                errs.append("C4 %r: e_%d = 0 with eps>0" % (C.node_name(b), i))
    return errs


def components(C):
    """Undirected components of a finite explicit graph, with their hw nodes."""
    seen = {}
    out = []
    for b in C.nodes():
        if b in seen:
            continue
        comp = []
        q = deque([b])
        seen[b] = len(out)
        while q:
            x = q.popleft()
            comp.append(x)
            nbrs = list(C.fout[x].values()) + list(C.fin[x].values())
            for y in nbrs:
                if y not in seen:
                    seen[y] = len(out)
                    q.append(y)
        comp.sort()
        hw = [x for x in comp if not any(C.eps(x))]
        out.append((hw, comp))
    return out


def full_graph(C, nodes):
    """Materialize a finite crystal-like object over an explicit node list."""
    g = CrystalGraph(C.datum)
    for b in nodes:
        g.add_node(C.wt(b), C.eps(b), C.phi(b), label=b)
    for b in nodes:
        for i in C.datum.I:
            t = C.f(b, i)
            if t is not None and t is not UNKNOWN:
                g.add_edge(g.index[b], i, g.index[t])
    return g


def rooted_iso(C1, r1, C2, r2, depth, data=True):
    """Rooted colored isomorphism of the depth-``depth`` f-balls.

    Returns (True, mapping) or (False, message).  Both graphs must have all
    f-arrows known strictly above ``depth``.
    """
    mapping = {r1: r2}
    back = {r2: r1}
    q = deque([(r1, r2, 0)])
    while q:
        a, b, d = q.popleft()
        if data and (C1.wt(a) != C2.wt(b) or C1.eps(a) != C2.eps(b) or C1.phi(a) != C2.phi(b)):
            return False, "data differ at depth %d: %r vs %r" % (d, a, b)
        if d >= depth:
            continue
        for i in C1.datum.I:
            x, y = C1.f(a, i), C2.f(b, i)
            if x is UNKNOWN or y is UNKNOWN:
                return False, "truncation reached at depth %d (color %d)" % (d, i)
            if (x is None) != (y is None):
                return False, "f_%d defined on one side only at depth %d (%r vs %r)" % (i, d, a, b)
            if x is None:
                continue
            if x in mapping or y in back:
                if mapping.get(x) != y or back.get(y) != x:
                    return False, "inconsistent matching at depth %d, color %d" % (d + 1, i)
                continue
            mapping[x] = y
            back[y] = x
            q.append((x, y, d + 1))
    return True, mapping
