"""Graded characters: Laurent polynomials in q over words in I."""
from functools import lru_cache


class NotDivisible(ArithmeticError):
    pass


class LaurentPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {e: v for e, v in (coeffs or {}).items() if v}

    @classmethod
    def mono(cls, exp=0, coef=1):
        return cls({exp: coef})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.mono(0, other)
        return self.c == other.c

    def __hash__(self):
        return hash(tuple(sorted(self.c.items())))

    def __add__(self, other):
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: v * other for e, v in self.c.items()})
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, s):
        return LaurentPoly({e + s: v for e, v in self.c.items()})

    def min_exp(self):
        return min(self.c)

    def at_one(self):
        return sum(self.c.values())

    def divide(self, other):
        """Exact division; raises NotDivisible if a remainder is left."""
        if not other:
            raise ZeroDivisionError
        if not self:
            return LaurentPoly()
        a0, b0 = self.min_exp(), other.min_exp()
        num = [0] * (max(self.c) - a0 + 1)
        for e, v in self.c.items():
            num[e - a0] = v
        den = [0] * (max(other.c) - b0 + 1)
        for e, v in other.c.items():
            den[e - b0] = v
        if len(den) > len(num):
            raise NotDivisible("divisor of higher degree")
        lead = den[-1]
        quo = [0] * (len(num) - len(den) + 1)
        for k in range(len(quo) - 1, -1, -1):
            v = num[k + len(den) - 1]
            if v % lead:
                raise NotDivisible("non-integral quotient")
            quo[k] = v // lead
            for t, dv in enumerate(den):
                num[k + t] -= quo[k] * dv
        if any(num):
            raise NotDivisible("nonzero remainder")
        return LaurentPoly({k + a0 - b0: v for k, v in enumerate(quo) if v})

    def terms(self):
        return sorted(self.c.items())

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e, v in self.terms():
            parts.append("%d" % v if e == 0 else "%dq^%d" % (v, e))
        return " + ".join(parts)


ONE = LaurentPoly.mono(0)


def qint(k, d=1):
    """[k] in q_i = q^d: q_i^{k-1} + q_i^{k-3} + ... + q_i^{1-k}."""
    return LaurentPoly({d * (k - 1 - 2 * t): 1 for t in range(k)})


def qfact(k, d=1):
    out = ONE
    for m in range(1, k + 1):
        out = out * qint(m, d)
    return out


class GradedChar:
    """Finitely supported map word -> LaurentPoly, all words of equal content."""

    def __init__(self, datum, terms=None):
        self.datum = datum
        self.t = {}
        for w, p in (terms or {}).items():
            if p:
                self.t[tuple(w)] = p

    @classmethod
    def word(cls, datum, w, poly=None):
        return cls(datum, {tuple(w): poly if poly is not None else ONE})

    @classmethod
    def unit(cls, datum):
        return cls.word(datum, ())

    def __bool__(self):
        return bool(self.t)

    def support(self):
        return sorted(self.t)

    def content(self):
        if not self.t:
            return None
        w = next(iter(self.t))
        nu = [0] * self.datum.n
        for x in w:
            nu[x] += 1
        return tuple(nu)

    def check_content(self):
        nus = set()
        for w in self.t:
            nu = [0] * self.datum.n
            for x in w:
                nu[x] += 1
            nus.add(tuple(nu))
        return len(nus) <= 1

    def __add__(self, other):
        out = dict(self.t)
        for w, p in other.t.items():
            out[w] = out[w] + p if w in out else p
        return GradedChar(self.datum, out)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.mono(0, -1))

    def scale(self, poly):
        return GradedChar(self.datum, {w: p * poly for w, p in self.t.items()})

    def min_exp(self):
        return min(p.min_exp() for p in self.t.values())

    def normal(self):
        if not self.t:
            return self
        m = self.min_exp()
        return GradedChar(self.datum, {w: p.shift(-m) for w, p in self.t.items()})

    def key(self):
        n = self.normal()
        return tuple(sorted((w, tuple(p.terms())) for w, p in n.t.items()))

    def same(self, other):
        """Equality up to a global grading shift."""
        return self.key() == other.key()

    def __eq__(self, other):
        return self.t == other.t

    def __hash__(self):
        return hash(self.key())

    def at_one(self):
        return {w: p.at_one() for w, p in self.t.items()}

    def dim(self):
        return sum(p.at_one() for p in self.t.values())

    def to_text(self):
        lines = []
        for w, p in sorted(self.normal().t.items()):
            ws = " ".join(str(x) for x in w) if w else "()"
            lines.append("%s : %s" % (ws, " ".join("%d:%d" % (v, e) for e, v in p.terms())))
        return "\n".join(lines)

    def __repr__(self):
        return "GradedChar(%s)" % ", ".join("%s:%r" % (w, p) for w, p in sorted(self.t.items()))


# ---- shuffles ----------------------------------------------------------

def shuffle_words(D, u, w):
    """{word: LaurentPoly} for u (x) w; crossing a letter x of u over a letter y
    of w (y ends up before x) costs -(alpha_x, alpha_y)."""
    u, w = tuple(u), tuple(w)

    @lru_cache(maxsize=None)
    def rec(a, b):
        # words built from u[:a] and w[:b], as {word: {deg: count}}
        if a == 0 or b == 0:
            return {u[:a] + w[:b]: {0: 1}}
        out = {}
        x = u[a - 1]
        cost = -sum(D.bilinear(x, y) for y in w[:b])
        for word, degs in rec(a - 1, b).items():
            slot = out.setdefault(word + (x,), {})
            for deg, n in degs.items():
                slot[deg + cost] = slot.get(deg + cost, 0) + n
        for word, degs in rec(a, b - 1).items():
            slot = out.setdefault(word + (w[b - 1],), {})
            for deg, n in degs.items():
                slot[deg] = slot.get(deg, 0) + n
        return out

    return {k: LaurentPoly(v) for k, v in rec(len(u), len(w)).items()}


def qshuffle(c1, c2):
    D = c1.datum
    out = {}
    for u, p in c1.t.items():
        for w, r in c2.t.items():
            for word, s in shuffle_words(D, u, w).items():
                term = p * r * s
                out[word] = out[word] + term if word in out else term
    return GradedChar(D, out)


def shuffle_oracle(D, u, w):
    """Brute force over position sets; counts crossed pairs directly."""
    from itertools import combinations
    n = len(u) + len(w)
    res = {}
    for pos in combinations(range(n), len(u)):
        ps = set(pos)
        word, ui, wi = [], 0, 0
        upos, wpos = [], []
        for k in range(n):
            if k in ps:
                word.append(u[ui]); upos.append(k); ui += 1
            else:
                word.append(w[wi]); wpos.append(k); wi += 1
        deg = 0
        for a, pa in zip(u, upos):
            for b, pb in zip(w, wpos):
                if pb < pa:
                    deg -= D.bilinear(a, b)
        res.setdefault(tuple(word), {})
        res[tuple(word)][deg] = res[tuple(word)].get(deg, 0) + 1
    return {k: LaurentPoly(v) for k, v in res.items()}


# ---- strips, eps and friends --------------------------------------------

def right_strip(c, i):
    return GradedChar(c.datum, {w[:-1]: p for w, p in c.t.items() if w and w[-1] == i})


def left_strip(c, i):
    return GradedChar(c.datum, {w[1:]: p for w, p in c.t.items() if w and w[0] == i})


def _run(w, i, from_right):
    n = 0
    seq = reversed(w) if from_right else iter(w)
    for x in seq:
        if x != i:
            break
        n += 1
    return n


def eps(c, i):
    """Longest i-suffix in the support (simple-module characters only)."""
    if not c:
        raise ValueError("eps of the zero character")
    return max(_run(w, i, True) for w in c.t)


def eps_check(c, i):
    """Longest i-prefix in the support: the left version of eps."""
    if not c:
        raise ValueError("eps_check of the zero character")
    return max(_run(w, i, False) for w in c.t)


def divide_char(c, poly):
    return GradedChar(c.datum, {w: p.divide(poly) for w, p in c.t.items()})


def divided_power(c, i, r):
    """e_i^{(r)}: strip r copies of i on the right, divide by [r]_i!."""
    out = c
    for _ in range(r):
        out = right_strip(out, i)
    return divide_char(out, qfact(r, c.datum.d[i]))


def etilde_top_char(c, i):
    m = eps(c, i)
    if m < 1:
        raise ValueError("eps_%d is zero" % i)
    return divided_power(c, i, m), m


def wt_i(c, i):
    nu = c.content()
    return -c.datum.pairing(i, nu)


def jump(c, i):
    return wt_i(c, i) + eps(c, i) + eps_check(c, i)


def phi_lambda(c, lam, j):
    """lambda_j + eps_j + wt_j, lam given as an h-vector."""
    return lam[j] + eps(c, j) + wt_i(c, j)


def in_rep(c, lam):
    return all(eps_check(c, i) <= lam[i] for i in c.datum.I)


def serre_apply(c, i, j):
    D = c.datum
    if i == j:
        raise ValueError("serre_apply needs i != j")
    n = 1 - D.a[i][j]
    total = GradedChar(D)
    for r in range(n + 1):
        term = divided_power(c, i, r)
        term = right_strip(term, j)
        term = divided_power(term, i, n - r)
        if r % 2:
            term = term.scale(LaurentPoly.mono(0, -1))
        total = total + term
    return total


def serre_all(c):
    """True iff every quantum Serre operator kills c."""
    D = c.datum
    for i in D.I:
        for j in D.I:
            if i != j and serre_apply(c, i, j):
                return False
    return True


def char_Lin(D, i, n):
    return GradedChar.word(D, (i,) * n, qfact(n, D.d[i]))


def char_Lcal(D, i, j, c, n):
    """Char L(i^{c-n} j i^n) = [c-n]_i! [n]_i! [i^{c-n} j i^n], c <= -a_ij."""
    if c > -D.a[i][j]:
        raise ValueError("c = %d exceeds -a_ij = %d" % (c, -D.a[i][j]))
    if not 0 <= n <= c:
        raise ValueError("need 0 <= n <= c")
    d = D.d[i]
    return GradedChar.word(D, (i,) * (c - n) + (j,) + (i,) * n, qfact(c - n, d) * qfact(n, d))
