"""Depth-truncated highest-weight crystals.

B(Lambda) for level-1 Lambda is grown by repeatedly taking the component of a
seed b (x) u inside B^{1,1} (x) (previous approximation).  In type A^(1) the
restricted-partition model gives an independent construction.
"""
import json
import os

from .cartan import build_cartan
from .crystal import (CrystalError, CrystalGraph, TensorProduct, axiom_check, explore,
                      rooted_iso, vsub)
from .kr import build_b11, seeds


class BootstrapError(CrystalError):
    pass


def seed_graph(D, s):
    """A single highest-weight node of weight Lambda_s with every f unknown."""
    g = CrystalGraph(D)
    lam = D.fundamental(s)
    g.add_node(lam, (0,) * D.n, lam, 0, None, label=("u", s))
    g.open_[0] = {i for i in D.I if lam[i] > 0}
    g.root = 0
    return g


def seed_table(B):
    """target t -> (b, s); the smallest s wins when several seeds exist."""
    table = {}
    for b, s, t in sorted(seeds(B), key=lambda x: (x[2], x[1], x[0])):
        table.setdefault(t, (b, s))
    return table


class Bootstrap:
    """Result of the iterative build: crystals[t], seed[t] = (b, s) and psi[t].

    psi[t][A] = (b, R): node A of B(Lambda_t) corresponds to b (x) R with R a
    node of crystals[s].
    """

    def __init__(self, family, rank, depth):
        self.family = family
        self.B = build_b11(family, rank)
        self.D = self.B.datum
        self.depth = depth
        self.seed = seed_table(self.B)
        self.rounds = 0
        self.crystals = {}
        self.psi = {}
        self._run()

    def _round(self, cur):
        new = {}
        for t, (b, s) in sorted(self.seed.items()):
            X = cur[s]
            new[t] = explore(TensorProduct(self.B, X), (b, X.root), self.depth)
        return new

    def _stable(self, old, new):
        maps = {}
        for t in new:
            if new[t].trusted_depth() < self.depth or old[t].trusted_depth() < self.depth:
                return None
            ok, m = rooted_iso(old[t], 0, new[t], 0, self.depth)
            if not ok:
                return None
            maps[t] = m
        return maps

    def _run(self):
        D = self.D
        level1 = sorted(self.seed)
        missing = [i for i in D.level_one() if i not in self.seed]
        if missing:
            raise BootstrapError("no seed for level-1 targets %s" % missing)
        cur = {s: seed_graph(D, s) for s in D.level_one()}
        for rnd in range(1, self.depth + 5):
            new = self._round(cur)
            self.rounds = rnd
            maps = self._stable(cur, new)
            if maps is not None:
                self.crystals = new
                # labels of new[t] point into cur[s]; move them into new[s]
                for t in level1:
                    b, s = self.seed[t]
                    G = new[t]
                    self.psi[t] = {A: (G.label[A][0], maps[s][G.label[A][1]])
                                   for A in G.nodes() if G.depth[A] <= self.depth}
                return
            cur = new
        raise BootstrapError("no stabilization within %d rounds" % (self.depth + 4))

    def source(self, t):
        return self.seed[t][1]


_BOOT = {}


def bootstrap(family, rank, depth):
    key = (family, rank, depth)
    if key not in _BOOT:
        _BOOT[key] = Bootstrap(family, rank, depth)
    return _BOOT[key]


def bootstrap_build(family, rank, target, depth):
    return bootstrap(family, rank, depth).crystals[target]


def hw_check(G, lam=None):
    """Node-level C1, nu bookkeeping along arrows and a unique trusted hw node."""
    D = G.datum
    errs = list(axiom_check(G))
    top = G.wt(G.root)
    for s, c, t in G.edges():
        nu = list(G.nu[s])
        nu[c] += 1
        if tuple(nu) != G.nu[t]:
            errs.append("nu does not grow by alpha_%d along %d -> %d" % (c, s, t))
    for b in G.nodes():
        expect = tuple(top[i] - D.pairing(i, G.nu[b]) for i in D.I)
        if expect != G.wt(b):
            errs.append("wt != Lambda - nu at node %d" % b)
        if D.level(G.wt(b)) != D.level(top):
            errs.append("level changes at node %d" % b)
    hws = [b for b in G.highest_weight_nodes()]
    if hws != [G.root]:
        errs.append("highest-weight nodes %s, expected only the root" % hws)
    return errs


# ---- type A partition model ----------------------------------------------

class PartitionCrystal:
    """B(Lambda_i) of A^(1)_l on (l+1)-restricted partitions.

    A partition with R rows expands as <k_1> (x) ... (x) <k_R> (x) u_{Lambda_{i-R}}
    with k_r = lambda_r + i - r mod (l+1); the operators follow the tensor rule.
    """

    def __init__(self, rank, i):
        self.D = self.datum = build_cartan("A1", rank)
        self.n = rank + 1
        self.i = i

    def factors(self, lam):
        return [(lam[r] + self.i - (r + 1)) % self.n for r in range(len(lam))]

    def tail(self, lam):
        return (self.i - len(lam)) % self.n

    def _suffix_phi(self, ks, tail, j):
        n = self.n
        out = [0] * (len(ks) + 1)
        out[len(ks)] = 1 if j == tail else 0
        for r in range(len(ks) - 1, -1, -1):
            k = ks[r]
            wt = (1 if j == (k + 1) % n else 0) - (1 if j == k else 0)
            out[r] = max(out[r + 1] + wt, 1 if j == (k + 1) % n else 0)
        return out

    def _act(self, lam, j, raising):
        lam = tuple(lam)
        ks = self.factors(lam)
        tail = self.tail(lam)
        ph = self._suffix_phi(ks, tail, j)
        n = self.n
        for r, k in enumerate(ks):
            e_b = 1 if j == k else 0
            if (e_b > ph[r + 1]) if raising else (e_b >= ph[r + 1]):
                if raising:
                    if j != k:
                        return None
                    new = list(lam)
                    new[r] -= 1
                else:
                    if j != (k + 1) % n:
                        return None
                    new = list(lam)
                    new[r] += 1
                while new and new[-1] == 0:
                    new.pop()
                return self._checked(tuple(new))
        if raising:
            return None
        if j != tail:
            return None
        return self._checked(lam + (1,))

    def _checked(self, lam):
        ext = lam + (0,)
        for a, b in zip(ext, ext[1:]):
            if not 0 <= a - b < self.n:
                raise CrystalError("non-restricted partition %r" % (lam,))
        return lam

    def f(self, lam, j):
        return self._act(lam, j, False)

    def e(self, lam, j):
        return self._act(lam, j, True)

    def _string(self, lam, j, raising):
        m, x = 0, lam
        while True:
            x = self._act(x, j, raising)
            if x is None:
                return m
            m += 1

    def eps(self, lam):
        return tuple(self._string(lam, j, True) for j in self.D.I)

    def phi(self, lam):
        return tuple(self._string(lam, j, False) for j in self.D.I)

    def wt(self, lam):
        return vsub(self.phi(lam), self.eps(lam))

    def residue_content(self, lam):
        nu = [0] * self.n
        for r, row in enumerate(lam):
            for col in range(row):
                nu[(self.i + col - r) % self.n] += 1
        return tuple(nu)

    def psi(self, lam):
        """(B^{1,1} node, remainder in B(Lambda_{i-1})): strip the top row."""
        if not lam:
            return (self.i - 1) % self.n, ()
        return (lam[0] + self.i - 1) % self.n, tuple(lam[1:])


def partition_model(rank, i, depth):
    P = PartitionCrystal(rank, i)
    G = explore(P, (), depth)
    return G


# ---- level-2 extraction ----------------------------------------------------

class Extracted:
    def __init__(self, graph, seed, seed_depth, trusted, multiplicity):
        self.graph = graph
        self.seed = seed
        self.seed_depth = seed_depth
        self.trusted = trusted
        self.multiplicity = multiplicity


def extract_level2(X, Y, target, N):
    """Component of X (x) Y with highest weight ``target`` (an h-vector).

    Highest-weight nodes of X (x) Y are x (x) u_Y with eps(x) <= wt(u_Y); the
    shallowest one of the right weight is used and only N - depth(x) is trusted.
    """
    lamY = Y.wt(Y.root)
    hits = []
    for x in sorted(X.nodes(), key=lambda b: (X.depth[b], b)):
        if X.depth[x] > N:
            continue
        if all(e <= l for e, l in zip(X.eps(x), lamY)):
            w = tuple(a + b for a, b in zip(X.wt(x), lamY))
            if w == tuple(target):
                hits.append(x)
    if not hits:
        raise CrystalError("no highest-weight node of weight %s within depth %d" % (target, N))
    x = hits[0]
    d0 = X.depth[x]
    same = sum(1 for h in hits if X.depth[h] == d0)
    trusted = N - d0
    G = explore(TensorProduct(X, Y), (x, Y.root), trusted)
    return Extracted(G, x, d0, trusted, same)


def level2_crystal(family, rank, target, rel_depth):
    """B(target) for a level-2 h-vector via B(Lambda_a) (x) B(Lambda_b)."""
    D = build_cartan(family, rank)
    ones = D.level_one()
    a = ones[0]
    # u (x) u is the answer when the target is a sum of two level-1 weights
    for x in ones:
        for y in ones:
            w = tuple(p + q for p, q in zip(D.fundamental(x), D.fundamental(y)))
            if w == tuple(target):
                boot = bootstrap(family, rank, rel_depth)
                return extract_level2(boot.crystals[x], boot.crystals[y], target, rel_depth)
    # otherwise scan deeper nodes of B(Lambda_a) (x) B(Lambda_a)
    N = rel_depth
    while True:
        boot = bootstrap(family, rank, N)
        X = boot.crystals[a]
        try:
            ex = extract_level2(X, X, target, N)
        except CrystalError:
            ex = None
        if ex is not None and ex.trusted >= rel_depth:
            return ex
        if ex is not None:
            N = ex.seed_depth + rel_depth
            continue
        N += 2
        if N > rel_depth + 16:
            raise CrystalError("target %s not found" % (target,))


def hw_components(B, X, N):
    """Highest-weight components of B (x) X: seeds b (x) u_X with eps(b) <= wt(u_X)."""
    lam = X.wt(X.root)
    out = []
    for b in B.nodes():
        if all(e <= l for e, l in zip(B.eps(b), lam)):
            G = explore(TensorProduct(B, X), (b, X.root), N)
            out.append((b, G))
    return out


def decomposition_check(B, X, expected, N):
    """Match the components of B (x) X against ``expected`` = [(name, graph)].

    Returns (ok, details) where details lists, per component, the name it
    matched (or None).
    """
    comps = hw_components(B, X, N)
    used = set()
    details = []
    ok = True
    for b, G in comps:
        hit = None
        for n, (name, H) in enumerate(expected):
            if n in used:
                continue
            good, _ = rooted_iso(G, 0, H, H.root, N)
            if good:
                hit = n
                break
        if hit is None:
            ok = False
            details.append((B.labels[b], G.wt(0), None))
        else:
            used.add(hit)
            details.append((B.labels[b], G.wt(0), expected[hit][0]))
    if len(used) != len(expected):
        ok = False
    return ok, details


def perfect_decomposition_check(family, rank, i, N):
    """B^{1,1} (x) B(Lambda_i) against its single summand in a perfect type."""
    from .kr import perfect_data
    sigma = perfect_data(family, rank)[i][1]
    boot = bootstrap(family, rank, N)
    X = boot.crystals
    return decomposition_check(boot.B, X[i], [("L%d" % sigma, X[sigma])], N)


# ---- cache ------------------------------------------------------------

def cache_path(family, rank, target, depth):
    root = os.environ.get("KRK_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, "%s_%d_L%d_d%d.json" % (family, rank, target, depth))


def build_cached(family, rank, target, depth):
    """bootstrap_build with an optional JSON cache under $KRK_CACHE_DIR."""
    p = cache_path(family, rank, target, depth)
    D = build_cartan(family, rank)
    if p and os.path.exists(p):
        with open(p) as fh:
            return CrystalGraph.from_dict(D, json.load(fh))
    G = bootstrap_build(family, rank, target, depth)
    if p:
        os.makedirs(os.path.dirname(p), exist_ok=True)
        with open(p, "w") as fh:
            fh.write(G.to_json())
    return G
