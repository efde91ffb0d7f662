"""Executable versions of the node decomposition [A] -> <b> (x) [R(A)] and of
the two case splits describing e_j and f_j on it."""
from collections import Counter

from .characters import eps as char_eps
from .hw import bootstrap
from .paths import classify, d_equivalent, walk_is_cyclotomic
from .trivial import char_T


class TheoremFailure(AssertionError):
    pass


class Decomposition:
    def __init__(self, A, b, R, word, walk, gamma):
        self.A, self.b, self.R = A, b, R
        self.word = tuple(word)
        self.walk = walk
        self.gamma = gamma
        self.k = len(self.word)

    def as_dict(self, B):
        return {"node": self.A, "b": B.labels[self.b], "R": self.R,
                "path": list(self.word), "k": self.k, "gamma": list(self.gamma)}


def walks_into(B, end, content):
    """All walks ending at ``end`` whose color content is exactly ``content``."""
    k = sum(content)
    out = []

    def rec(node, left, rev_word, rev_walk):
        if sum(left) == 0:
            out.append((tuple(reversed(rev_word)), tuple(reversed(rev_walk))))
            return
        for c, src in sorted(B.inn[node].items()):
            if left[c] > 0:
                left[c] -= 1
                rev_word.append(c)
                rev_walk.append(src)
                rec(src, left, rev_word, rev_walk)
                rev_word.pop()
                rev_walk.pop()
                left[c] += 1

    rec(end, list(content), [], [end])
    assert all(len(w) == k for w, _ in out)
    return out


class PsiMap:
    """Psi: B(Lambda_t) -> B^{1,1} (x) B(Lambda_s) on a bootstrapped truncation."""

    def __init__(self, family, rank, depth):
        self.boot = bootstrap(family, rank, depth)
        self.family = family
        self.B = self.boot.B
        self.D = self.B.datum
        self.depth = depth
        self.cls = classify(family, rank)
        self._dec = {}

    def targets(self):
        return sorted(self.boot.crystals)

    def source(self, t):
        return self.boot.source(t)

    def crystal(self, t):
        return self.boot.crystals[t]

    def remainder_crystal(self, t):
        return self.boot.crystals[self.source(t)]

    def image(self, t, A):
        return self.boot.psi[t][A]

    def strictness(self, t):
        """Psi commutes with every e_j, f_j inside the trusted ball and keeps data."""
        from .crystal import TensorProduct
        G = self.crystal(t)
        X = self.remainder_crystal(t)
        P = TensorProduct(self.B, X)
        errs = []
        for A in G.nodes():
            if G.depth[A] > self.depth:
                continue
            img = self.image(t, A)
            if P.wt(img) != G.wt(A) or P.eps(img) != G.eps(A) or P.phi(img) != G.phi(A):
                errs.append("data differ at node %d" % A)
            for j in self.D.I:
                if G.depth[A] < self.depth:
                    fa = G.f(A, j)
                    fi = P.f(img, j)
                    if (fa is None) != (fi is None) or (fa is not None and self.image(t, fa) != fi):
                        errs.append("f_%d does not commute at node %d" % (j, A))
                ea = G.e(A, j)
                ei = P.e(img, j)
                if (ea is None) != (ei is None) or (ea is not None and self.image(t, ea) != ei):
                    errs.append("e_%d does not commute at node %d" % (j, A))
        return errs

    def decompose(self, t, A):
        key = (t, A)
        if key in self._dec:
            return self._dec[key]
        G, X = self.crystal(t), self.remainder_crystal(t)
        s = self.source(t)
        b, R = self.image(t, A)
        gamma = tuple(x - y for x, y in zip(G.nu[A], X.nu[R]))
        if min(gamma) < 0:
            raise TheoremFailure("gamma^+ not in Q^+ at node %d" % A)
        if sum(gamma) == 0:
            if b != self.boot.seed[t][0]:
                raise TheoremFailure("k = 0 but b is not the seed at node %d" % A)
            dec = Decomposition(A, b, R, (), (b,), gamma)
        else:
            cands = [(w, walk) for w, walk in walks_into(self.B, b, gamma)
                     if walk_is_cyclotomic(self.B, self.cls, w, walk, s, t)]
            if not cands:
                raise TheoremFailure("no cyclotomic path for node %d of B(Lambda_%d)" % (A, t))
            cands.sort()
            w0 = cands[0][0]
            c0 = char_T(self.family, self.D.rank, w0)
            for w, _ in cands[1:]:
                if not d_equivalent(self.cls, w0, w) or not char_T(self.family, self.D.rank, w).same(c0):
                    raise TheoremFailure("inequivalent paths %r, %r at node %d" % (w0, w, A))
            dec = Decomposition(A, b, R, w0, cands[0][1], gamma)
        self._dec[key] = dec
        return dec

    def phi_remainder(self, t, R, j):
        """delta_{j,s} + eps_j(R) + wt_j(R), cross-checked with the crystal."""
        X = self.remainder_crystal(t)
        s = self.source(t)
        val = (1 if j == s else 0) + X.eps(R)[j] - self.D.pairing(j, X.nu[R])
        if val != X.phi(R)[j]:
            raise TheoremFailure("phi^Lambda formula %d != crystal phi %d" % (val, X.phi(R)[j]))
        return val

    def eps_T(self, word, j):
        if not word:
            return 0
        return char_eps(char_T(self.family, self.D.rank, word), j)

    def same_T(self, w1, w2):
        return char_T(self.family, self.D.rank, w1).same(char_T(self.family, self.D.rank, w2))


def build_psi(family, rank, depth):
    return PsiMap(family, rank, depth)


class TheoremReport:
    def __init__(self):
        self.counts = Counter()
        self.failures = []
        self.low_k_log = []

    def fail(self, msg):
        self.failures.append(msg)

    @property
    def ok(self):
        return not self.failures

    def as_dict(self):
        return {"counts": dict(sorted(self.counts.items())), "failures": self.failures[:20],
                "n_failures": len(self.failures), "low_k_branch_log": len(self.low_k_log)}


def _branch(psi, t, dec, j, raising, rep):
    """Return (theorem_on_T, tensor_on_b) for the operator at this node."""
    s_eps = psi.eps_T(dec.word, j)
    phiR = psi.phi_remainder(t, dec.R, j)
    theorem = s_eps > phiR if raising else s_eps >= phiR
    eb = psi.B.eps(dec.b)[j]
    phR = psi.remainder_crystal(t).phi(dec.R)[j]
    tensor = eb > phR if raising else eb >= phR
    if dec.k >= 1 and s_eps != eb:
        rep.counts["eps_anchor_mismatch_k%d" % min(dec.k, 2)] += 1
    return theorem, tensor


def verify_etil(psi, t, A, j, rep):
    G = psi.crystal(t)
    A2 = G.e(A, j)
    if A2 is None:
        return
    if psi.cls.kind[t] == "B" and sum(G.nu[A]) <= 1:
        rep.counts["e_gated"] += 1
        return
    d1 = psi.decompose(t, A)
    d2 = psi.decompose(t, A2)
    theorem, tensor = _branch(psi, t, d1, j, True, rep)
    if theorem != tensor:
        if d1.k >= 2:
            rep.fail("E-branch differs from the tensor rule: type %s t=%d node %d j=%d" % (psi.family, t, A, j))
            return
        rep.low_k_log.append(("e", t, A, j, d1.k))
        theorem = tensor
    X = psi.remainder_crystal(t)
    if theorem:
        rep.counts["E1"] += 1
        ok = (d2.R == d1.R and d2.k == d1.k - 1 and psi.same_T(d2.word + (j,), d1.word))
    else:
        rep.counts["E2"] += 1
        ok = (d2.b == d1.b and d2.R == X.e(d1.R, j) and psi.same_T(d2.word, d1.word))
    if not ok:
        rep.fail("%s fails: type %s t=%d node %d j=%d" % ("E1" if theorem else "E2", psi.family, t, A, j))


def verify_ftil(psi, t, A, j, rep):
    G = psi.crystal(t)
    if G.phi(A)[j] == 0 or G.depth[A] >= psi.depth:
        return
    A2 = G.f(A, j)
    d1 = psi.decompose(t, A)
    d2 = psi.decompose(t, A2)
    theorem, tensor = _branch(psi, t, d1, j, False, rep)
    if theorem != tensor:
        if d1.k >= 2:
            rep.fail("F-branch differs from the tensor rule: type %s t=%d node %d j=%d" % (psi.family, t, A, j))
            return
        rep.low_k_log.append(("f", t, A, j, d1.k))
        theorem = tensor
    X = psi.remainder_crystal(t)
    if theorem:
        rep.counts["F1"] += 1
        ok = (d2.R == d1.R and d2.k == d1.k + 1 and psi.same_T(d2.word, d1.word + (j,)))
    else:
        rep.counts["F2"] += 1
        ok = (d2.b == d1.b and d2.R == X.f(d1.R, j) and psi.same_T(d2.word, d1.word))
    if not ok:
        rep.fail("%s fails: type %s t=%d node %d j=%d" % ("F1" if theorem else "F2", psi.family, t, A, j))


def theorem_suite(family, rank, depth, skip=()):
    """Decompose every node up to ``depth`` and check both case splits."""
    psi = PsiMap(family, rank, depth + 1)
    rep = TheoremReport()
    for t in psi.targets():
        if t in skip:
            continue
        for e in psi.strictness(t):
            rep.fail(e)
        G = psi.crystal(t)
        for A in G.nodes():
            if G.depth[A] > depth:
                continue
            try:
                d = psi.decompose(t, A)
            except TheoremFailure as exc:
                rep.fail(str(exc))
                continue
            rep.counts["nodes"] += 1
            if d.k >= 1 and not psi.same_T(d.word, d.word):
                rep.fail("character mismatch")
            for j in psi.D.I:
                try:
                    verify_etil(psi, t, A, j, rep)
                    verify_ftil(psi, t, A, j, rep)
                except TheoremFailure as exc:
                    rep.fail(str(exc))
    return rep


def typeC_branching_check(rank, depth=4):
    """Level-1 correspondences in type C^(1), in the tensor-rule form.

    Returns a list of (description, ok) pairs.
    """
    psi = PsiMap("C1", rank, depth)
    B = psi.B
    G0, G1, G2 = psi.crystal(0), psi.crystal(1), psi.crystal(2)
    lab = B.id

    def f_path(G, word):
        x = G.root
        for j in word:
            x = G.f(x, j)
        return x

    u1 = G1.root
    f1u1 = G1.f(u1, 1)
    rows = []
    A = f_path(G0, (0, 1))
    rows.append(("f1 f0 u0 -> <0> (x) f1 u1", psi.image(0, A) == (lab["0"], f1u1)))
    A = f_path(G2, (2, 1))
    rows.append(("f1 f2 u2 -> <2> (x) f1 u1", psi.image(2, A) == (lab["2"], f1u1)))
    A = f_path(G0, (0,))
    rows.append(("f0 u0 -> <0> (x) u1", psi.image(0, A) == (lab["0"], u1)))
    A = f_path(G2, (2,))
    rows.append(("f2 u2 -> <2> (x) u1", psi.image(2, A) == (lab["2"], u1)))
    # module side: R(L(01)) = L(1) and L(01) lies in rep(Lambda_0)
    d = psi.decompose(0, f_path(G0, (0, 1)))
    rows.append(("R(f1 f0 u0) = f1 u1 with path (0)", d.R == f1u1 and d.word == (0,)))
    return rows
