"""Verification suites shared by the CLI and the test-suite.

Each runner returns a plain dict report:
    {"suite", "ok", "counts", "checks": [[name, ok], ...], "first_failure", "seconds"}
"""
import time
from collections import Counter

from .cartan import FAMILIES, MIN_RANK, appendix_datum, build_cartan, check_datum
from .characters import (GradedChar, char_Lcal, in_rep, jump, phi_lambda, serre_all)
from .crystal import rooted_iso
from .kr import build_b11, structural_check
from .paths import (all_words, classify, cyclotomic_existence_check, derive_classes,
                    forbidden, is_exception, phi_hat, table_classes)
from .trivial import build_T, building_T_check, closed_form_char, verify_relations

ALL_TYPES = [(f, r) for f in FAMILIES for r in ([1, 2] if f == "A1" else [MIN_RANK[f]])]

# Theorem-suite targets: (family, rank, skipped targets)
THEOREM_TYPES = [
    ("A1", 2, ()), ("C1", 2, ()), ("A2even", 2, ()), ("A2dag", 2, ()), ("D2", 2, (1,)),
    ("D1", 5, ()), ("B1", 3, (2,)), ("A2odd", 3, ()),
]


class Report:
    def __init__(self, suite):
        self.suite = suite
        self.counts = Counter()
        self.checks = []
        self.first_failure = None
        self._t0 = time.perf_counter()
        self.extra = {}
        self.seconds = None

    def done(self):
        self.seconds = time.perf_counter() - self._t0
        return self

    def check(self, name, ok, context=None):
        ok = bool(ok)
        self.checks.append([name, ok])
        if not ok and self.first_failure is None:
            self.first_failure = "%s: %s" % (name, context) if context else name
        return ok

    def tally(self, name, ok, context=None):
        """Record a bulk check without listing it individually."""
        self.counts[name + (" ok" if ok else " fail")] += 1
        if not ok and self.first_failure is None:
            self.first_failure = "%s: %s" % (name, context) if context else name
        return ok

    @property
    def ok(self):
        return self.first_failure is None

    def as_dict(self, timing=True):
        out = {"suite": self.suite, "ok": self.ok, "counts": dict(sorted(self.counts.items())),
               "checks": self.checks, "first_failure": self.first_failure}
        out.update(self.extra)
        if timing:
            sec = self.seconds if self.seconds is not None else time.perf_counter() - self._t0
            out["seconds"] = round(sec, 3)
        return out


def _all_pairs(max_rank):
    return [(f, r) for f in FAMILIES for r in range(MIN_RANK[f], max_rank + 1)]


# ---- 1: Cartan ---------------------------------------------------------------

def cartan_suite(pairs=None, max_rank=8):
    rep = Report("cartan")
    for f, r in pairs or _all_pairs(max_rank):
        errs = check_datum(build_cartan(f, r))
        rep.tally("datum", not errs, "%s_%d %s" % (f, r, errs[:2]))
    rep.check("appendix datum", not check_datum(appendix_datum()))
    return rep.done()


# ---- 2: KR structure, class table, forbidden indices ------------------------------

def kr_suite(pairs=None, max_rank=8, maxlen=12):
    rep = Report("kr_structure")
    for f, r in pairs or _all_pairs(max_rank):
        B = build_b11(f, r)
        errs = structural_check(B)
        rep.tally("walks+level0+axioms", not errs, "%s_%d %s" % (f, r, errs[:2]))
        rep.tally("class table", derive_classes(B) == table_classes(f, r), "%s_%d" % (f, r))
        miss = cyclotomic_existence_check(f, r, maxlen)
        got = {i for i, k in miss.items() if k is not None}
        rep.tally("forbidden", got == forbidden(f, r), "%s_%d %s" % (f, r, sorted(got)))
    return rep.done()


# ---- 3: small type A golden data ----------------------------------------------------------------
# partitions written as tuples of row lengths

A2_L0_D3 = [((), 0, (1,)), ((1,), 1, (2,)), ((1,), 2, (1, 1)), ((1, 1), 1, (1, 1, 1)),
           ((2,), 2, (2, 1))]
A2_L2_D3 = [((), 2, (1,)), ((1,), 0, (2,)), ((1,), 1, (1, 1)), ((1, 1), 0, (1, 1, 1)),
           ((2,), 1, (2, 1))]
A2_L0_D4 = A2_L0_D3 + [((2, 1), 0, (2, 2)), ((2, 1), 2, (3, 1)), ((1, 1, 1), 1, (2, 1, 1)),
                     ((1, 1, 1), 0, (1, 1, 1, 1))]
# node of B(Lambda_0) -> (B^{1,1} node, node of B(Lambda_2))
A2_PSI_D4 = {
    (): ("2", ()), (1,): ("0", ()), (2,): ("1", ()), (1, 1): ("0", (1,)),
    (2, 1): ("1", (1,)), (1, 1, 1): ("0", (1, 1)), (2, 2): ("1", (2,)),
    (3, 1): ("2", (1,)), (2, 1, 1): ("1", (1, 1)), (1, 1, 1, 1): ("0", (1, 1, 1)),
}


def _named_edges(G, names, depth):
    return sorted((names[s], c, names[t]) for s, c, t in G.edges()
                  if G.depth[t] <= depth)


def golden_suite():
    from .hw import bootstrap, partition_model
    rep = Report("golden_typeA")
    boot = bootstrap("A1", 2, 4)
    B = boot.B
    names = {}
    for i in (0, 2):
        G = boot.crystals[i]
        P = partition_model(2, i, 4)
        ok, m = rooted_iso(G, G.root, P, P.root, 4)
        rep.check("B(L%d) bootstrap ~ partitions" % i, ok, m)
        names[i] = {A: P.label[m[A]] for A in G.nodes() if G.depth[A] <= 4} if ok else {}
    if not rep.ok:
        return rep.done()
    G0, G2 = boot.crystals[0], boot.crystals[2]
    rep.check("B(L0): 6 nodes to depth 3",
              sum(1 for A in G0.nodes() if G0.depth[A] <= 3) == 6)
    rep.check("B(L0) arrows to depth 3", _named_edges(G0, names[0], 3) == sorted(A2_L0_D3))
    rep.check("B(L2) arrows to depth 3", _named_edges(G2, names[2], 3) == sorted(A2_L2_D3))
    n4 = sum(1 for A in G0.nodes() if G0.depth[A] <= 4)
    rep.check("B(L0): 10 nodes to depth 4", n4 == 10, n4)
    rep.check("B(L0) arrows to depth 4", _named_edges(G0, names[0], 4) == sorted(A2_L0_D4))
    pairs = {names[0][A]: (B.labels[b], names[2][R]) for A, (b, R) in boot.psi[0].items()
             if G0.depth[A] <= 4}
    rep.check("Psi pairs to depth 4", pairs == A2_PSI_D4,
              sorted(set(pairs.items()) ^ set(A2_PSI_D4.items()))[:3])
    from .hw import PartitionCrystal
    P = PartitionCrystal(2, 0)
    rep.check("top-row removal matches", all(
        (str(P.psi(lam)[0]), P.psi(lam)[1]) == v for lam, v in A2_PSI_D4.items()))
    rep.extra["psi_pairs"] = len(pairs)
    return rep.done()


# ---- 4: cross-model --------------------------------------------------------------

def cross_model_suite(ranks=(2, 3), depth=8):
    from .hw import bootstrap, hw_check, partition_model
    rep = Report("cross_model")
    for r in ranks:
        boot = bootstrap("A1", r, depth)
        for i in range(r + 1):
            G = boot.crystals[i]
            P = partition_model(r, i, depth)
            ok, m = rooted_iso(G, G.root, P, P.root, depth)
            rep.check("A1_%d L%d" % (r, i), ok, m)
            rep.check("A1_%d L%d hw" % (r, i), not hw_check(G))
    return rep.done()


# ---- 5: phi-hat tables -------------------------------------------------------------

def tables_suite(pairs=None, max_rank=6, minlen=2, maxlen=12):
    rep = Report("tables")
    rep.counts["exception class"] = 0
    for f, r in pairs or _all_pairs(max_rank):
        B = build_b11(f, r)
        cls = classify(f, r)
        D = B.datum
        for k in range(minlen, maxlen + 1):
            for w in all_words(B, k):
                c = closed_form_char(f, r, w)
                lam = D.fundamental(w[0])
                rep_ok = in_rep(c, lam)
                ph = phi_hat(B, cls, w)
                ctx = "%s_%d %s" % (f, r, w)
                for j in D.I:
                    h = ph[j]
                    jmp = jump(c, j)
                    rep.tally("jump = table", jmp == h["jump"], ctx)
                    if w[0] != w[1]:
                        rep.tally("phi = table total", phi_lambda(c, lam, j) == h["total"], ctx)
                    if not rep_ok:
                        rep.counts["outside rep"] += 1
                        continue
                    if w[0] != w[1]:
                        rep.tally("jump = phi", jmp == h["total"], ctx)
                    if is_exception(cls, w, j):
                        rep.counts["exception class"] += 1
                        continue
                    rep.tally("oracle = table split",
                              (h["oracle_minus"], h["oracle_plus"]) == (h["minus"], h["plus"]), ctx)
    return rep.done()


# ---- 6: T(p,k) ----------------------------------------------------------------------

def tmod_suite(pairs=None, max_rank=5, maxlen=10):
    rep = Report("tmod")
    for f, r in pairs or _all_pairs(max_rank):
        B = build_b11(f, r)
        for k in range(1, maxlen + 1):
            for w in all_words(B, k):
                m = build_T(f, r, w)
                ctx = "%s_%d %s" % (f, r, w)
                errs = verify_relations(m)
                rep.tally("relations", not errs, "%s %s" % (ctx, errs[:2]))
                c = m.char()
                rep.tally("closed form", c.same(closed_form_char(f, r, w)), ctx)
                rep.tally("building_T", building_T_check(f, r, w)[0], ctx)
                rep.tally("serre", serre_all(c), ctx)
    return rep.done()


# ---- 7: jump anchors ------------------------------------------------------------------

def anchors_suite():
    rep = Report("jump_anchors")
    for r in (2, 3):
        D = build_cartan("A1", r)
        rep.check("A1_%d jump_1 L(0) = 1" % r, jump(GradedChar.word(D, (0,)), 1) == 1)
    A = appendix_datum()
    for i in A.I:
        for j in A.I:
            if i == j:
                continue
            for c in range(-A.a[i][j] + 1):
                for n in range(c + 1):
                    got = jump(char_Lcal(A, i, j, c, n), i)
                    rep.check("jump_%s L(%s^%d %s %s^%d)" % (A.labels[i], A.labels[i], c - n,
                                                             A.labels[j], A.labels[i], n),
                              got == -A.a[i][j] - c, got)
    return rep.done()


# ---- 8: rank-2 catalog -------------------------------------------------------------------

def appendix_suite():
    from .appendix import build_catalog, verify_catalog, verify_jump_table, verify_thick_arrows
    rep = Report("appendix")
    cat = build_catalog()
    res = verify_catalog(cat)
    for key in ("in_rep", "serre", "phi_nonneg", "strings_match_arrows", "top_is_terminal",
                "arrow_content"):
        rep.check(key, res[key])
    rep.check("max depth 7", res["max_depth"] == 7, res["max_depth"])
    rows = verify_jump_table(cat)
    rep.check("32 jump values", all(r[4] for r in rows),
              [r[:4] for r in rows if not r[4]][:2])
    rep.counts["jump values"] = 2 * len(rows)
    arrows = verify_thick_arrows(cat)
    rep.check("thick arrows", all(a[4] for a in arrows if a[3] == "thick"))
    rep.check("plain arrows", all(a[4] for a in arrows if a[3] == "plain"))
    rep.counts["thick"] = sum(1 for a in arrows if a[3] == "thick")
    rep.counts["plain"] = sum(1 for a in arrows if a[3] == "plain")
    return rep.done()


# ---- 9: decompositions ------------------------------------------------------------------

def decomposition_suite(c_depth=6, a_depth=5):
    from .hw import bootstrap, decomposition_check, level2_crystal
    rep = Report("decomposition")
    for r in (2, 3):
        B = build_b11("C1", r)
        X = bootstrap("C1", r, c_depth).crystals
        ok, det = decomposition_check(B, X[1], [("L0", X[0]), ("L2", X[2])], c_depth)
        rep.check("C1_%d B11 x B(L1) = B(L0) + B(L2)" % r, ok, det)
        ok, det = decomposition_check(B, X[0], [("L1", X[1])], c_depth)
        rep.check("C1_%d B11 x B(L0) = B(L1)" % r, ok, det)

    def lam(D, *ks):
        return tuple(sum(D.fundamental(k)[i] for k in ks) for i in D.I)

    D = build_cartan("A2even", 2)
    X1 = level2_crystal("A2even", 2, lam(D, 1), a_depth)
    X2 = level2_crystal("A2even", 2, lam(D, 2), a_depth)
    X00 = level2_crystal("A2even", 2, lam(D, 0, 0), a_depth)
    ok, det = decomposition_check(build_b11("A2even", 2), X1.graph,
                                  [("2L0", X00.graph), ("L2", X2.graph)], a_depth)
    rep.check("A2even_2 B11 x B(L1) = B(2L0) + B(L2)", ok, det)
    D = build_cartan("A2even", 3)
    X = {k: level2_crystal("A2even", 3, lam(D, k), a_depth) for k in (1, 2, 3)}
    ok, det = decomposition_check(build_b11("A2even", 3), X[2].graph,
                                  [("L1", X[1].graph), ("L3", X[3].graph)], a_depth)
    rep.check("A2even_3 B11 x B(L2) = B(L1) + B(L3)", ok, det)
    rep.extra["extraction"] = {"A2even_3 L%d" % k: [x.seed_depth, x.trusted, x.multiplicity]
                               for k, x in sorted(X.items())}
    return rep.done()


# ---- 10: theorem ------------------------------------------------------------------------

def theorem_runs(types=None, depth=7):
    from .categorify import theorem_suite, typeC_branching_check
    rep = Report("theorem")
    for f, r, skip in types or THEOREM_TYPES:
        res = theorem_suite(f, r, depth, skip)
        name = "%s_%d" % (f, r)
        rep.check(name, res.ok, res.failures[:2])
        for key, v in sorted(res.counts.items()):
            rep.counts[key] += v
        bad_log = [x for x in res.low_k_log if x[4] >= 2]
        rep.check(name + " low-k log", not bad_log, bad_log[:2])
        rep.counts["low-k branch log"] += len(res.low_k_log)
    if types is None or any(t[0] == "C1" for t in types):
        for r in (2, 3):
            for desc, ok in typeC_branching_check(r):
                rep.check("C1_%d %s" % (r, desc), ok)
    return rep.done()


# ---- per-type run used by verify-all ---------------------------------------------------------

def type_suite(family, rank, depth=6, maxlen=10, only=None):
    """Everything that can be checked for a single (type, rank)."""
    from .categorify import theorem_suite
    from .hw import bootstrap, hw_check
    pair = [(family, rank)]
    reports = [cartan_suite(pair), kr_suite(pair, maxlen=maxlen),
               tables_suite(pair, maxlen=maxlen), tmod_suite(pair, maxlen=maxlen)]
    rep = Report("crystal")
    boot = bootstrap(family, rank, depth)
    for t, G in sorted(boot.crystals.items()):
        errs = hw_check(G)
        rep.check("B(L%d) axioms" % t, not errs, errs[:2])
        rep.counts["nodes"] += sum(1 for A in G.nodes() if G.depth[A] <= depth)
    reports.append(rep.done())
    rep = Report("categorify")
    D = build_cartan(family, rank)
    skip = set(forbidden(family, rank))
    if only is not None:
        skip |= {t for t in D.level_one() if t != only}
    res = theorem_suite(family, rank, depth, tuple(sorted(skip)))
    rep.check("%s_%d theorem" % (family, rank), res.ok, res.failures[:2])
    for key, v in sorted(res.counts.items()):
        rep.counts[key] += v
    rep.counts["low-k branch log"] += len(res.low_k_log)
    rep.check("low-k log only k <= 1", all(x[4] <= 1 for x in res.low_k_log))
    reports.append(rep.done())
    return reports
