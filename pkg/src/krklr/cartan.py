"""Affine Cartan data (Kac numbering) for the eight families used here.

Conventions: a[i][j] = <h_i, alpha_j>, (alpha_i, alpha_j) = d_i * a[i][j] with
d the minimal positive integral symmetrizer.  Weights are stored only through
their pairing vectors (w_i = <h_i, w>).
"""
from fractions import Fraction
from math import gcd, lcm
import json

FAMILIES = ("A1", "C1", "A2even", "A2dag", "D2", "D1", "B1", "A2odd")

MIN_RANK = {
    "A1": 1, "C1": 2, "A2even": 2, "A2dag": 2, "D2": 2,
    "D1": 4, "B1": 3, "A2odd": 3,
}

PRETTY = {
    "A1": "A^(1)_{l}", "C1": "C^(1)_{l}", "A2even": "A^(2)_{2l}",
    "A2dag": "A^(2)dag_{2l}", "D2": "D^(2)_{l+1}", "D1": "D^(1)_{l}",
    "B1": "B^(1)_{l}", "A2odd": "A^(2)_{2l-1}",
}


class CartanError(ValueError):
    pass


def _chain(n):
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def _link(a, i, j, aij=-1, aji=-1):
    a[i][j] = aij
    a[j][i] = aji


def cartan_matrix(family, rank):
    ell = rank
    n = ell + 1
    a = _chain(n)
    if family == "A1":
        if ell == 1:
            return [[2, -2], [-2, 2]]
        for k in range(n):
            _link(a, k, (k + 1) % n)
        return a
    if family in ("C1", "A2even", "A2dag", "D2"):
        for k in range(ell):
            _link(a, k, k + 1)
        if family == "C1":
            _link(a, 0, 1, -1, -2)
            _link(a, ell - 1, ell, -2, -1)
        elif family == "A2even":
            _link(a, 0, 1, -2, -1)
            _link(a, ell - 1, ell, -2, -1)
        elif family == "A2dag":
            _link(a, 0, 1, -1, -2)
            _link(a, ell - 1, ell, -1, -2)
        else:  # D2
            _link(a, 0, 1, -2, -1)
            _link(a, ell - 1, ell, -1, -2)
        return a
    # the remaining families share the fork 0-2, 1-2 at the left end
    _link(a, 0, 2)
    _link(a, 1, 2)
    if family == "D1":
        for k in range(2, ell - 2):
            _link(a, k, k + 1)
        _link(a, ell - 2, ell - 1)
        _link(a, ell - 2, ell)
        return a
    for k in range(2, ell):
        _link(a, k, k + 1)
    if family == "B1":
        _link(a, ell - 1, ell, -1, -2)
    elif family == "A2odd":
        _link(a, ell - 1, ell, -2, -1)
    else:
        raise CartanError("unknown family %r" % family)
    return a


def level_list(family, rank):
    """Levels of Lambda_0..Lambda_l."""
    ell = rank
    if family in ("A1", "C1"):
        return [1] * (ell + 1)
    if family == "A2even":
        return [1] + [2] * ell
    if family == "A2dag":
        return [2] * ell + [1]
    if family == "D2":
        return [1] + [2] * (ell - 1) + [1]
    if family == "D1":
        return [1, 1] + [2] * (ell - 3) + [1, 1]
    if family == "B1":
        return [1, 1] + [2] * (ell - 2) + [1]
    if family == "A2odd":
        return [1, 1] + [2] * (ell - 1)
    raise CartanError("unknown family %r" % family)


def minimal_symmetrizer(a):
    n = len(a)
    d = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * a[i][j] / a[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise CartanError("disconnected diagram")
    den = lcm(*[x.denominator for x in d])
    ints = [int(x * den) for x in d]
    g = gcd(*ints)
    return [x // g for x in ints]


class CartanDatum:
    """Cartan datum with symmetrizer d, central coefficients c and levels."""

    def __init__(self, family, rank, a, labels=None, levels=None, affine=True):
        self.family = family
        self.rank = rank
        self.a = [list(r) for r in a]
        self.n = len(a)
        self.I = tuple(range(self.n))
        self.labels = list(labels) if labels else [str(i) for i in self.I]
        self.d = minimal_symmetrizer(self.a)
        self.affine = affine
        self.c = self._left_null() if affine else None
        self.levels = list(levels) if levels is not None else (list(self.c) if affine else None)

    def _left_null(self):
        # c with sum_i c_i a_ij = 0; these are the levels of the Lambda_i
        import sympy
        m = sympy.Matrix(self.a).T
        ns = m.nullspace()
        if len(ns) != 1:
            raise CartanError("corank is %d, expected 1" % len(ns))
        v = ns[0]
        den = lcm(*[sympy.fraction(x)[1] for x in v])
        v = [int(x * den) for x in v]
        if v[0] < 0:
            v = [-x for x in v]
        g = gcd(*v)
        return [x // g for x in v]

    def marks(self):
        """Right null vector (sum_j a_ij m_j = 0), minimal positive integral."""
        import sympy
        ns = sympy.Matrix(self.a).nullspace()
        v = ns[0]
        den = lcm(*[sympy.fraction(x)[1] for x in v])
        v = [int(x * den) for x in v]
        if v[0] < 0:
            v = [-x for x in v]
        g = gcd(*v)
        return [x // g for x in v]

    def pairing(self, i, nu):
        return sum(self.a[i][j] * nu[j] for j in self.I)

    def bilinear(self, i, j):
        return self.d[i] * self.a[i][j]

    def alpha_h(self, i):
        """h-vector of the simple root alpha_i (column i of the matrix)."""
        return tuple(self.a[j][i] for j in self.I)

    def fundamental(self, i, mult=1):
        return tuple(mult if j == i else 0 for j in self.I)

    def level(self, w):
        return sum(ci * wi for ci, wi in zip(self.c, w))

    def unit(self, i):
        return tuple(1 if j == i else 0 for j in self.I)

    def level_one(self):
        return [i for i in self.I if self.levels[i] == 1]

    def name(self):
        return "%s_%d" % (self.family, self.rank)

    def to_dict(self):
        return {
            "type": self.family, "rank": self.rank, "cartan": self.a,
            "d": self.d, "c": self.c, "levels": self.levels,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    def __repr__(self):
        return "CartanDatum(%s, %d)" % (self.family, self.rank)


_CACHE = {}


def build_cartan(family, rank=None):
    if family not in FAMILIES:
        raise CartanError("unknown type %r; expected one of %s" % (family, ", ".join(FAMILIES)))
    if rank is None:
        rank = MIN_RANK[family]
    if rank < MIN_RANK[family]:
        raise CartanError("rank %d below the bound %d for %s" % (rank, MIN_RANK[family], family))
    key = (family, rank)
    if key not in _CACHE:
        a = cartan_matrix(family, rank)
        _CACHE[key] = CartanDatum(family, rank, a, levels=level_list(family, rank))
    return _CACHE[key]


def appendix_datum():
    """Finite rank-2 datum with a_hi = -1, a_ih = -2; index 0 is h, 1 is i."""
    return CartanDatum("B2", 2, [[2, -1], [-2, 2]], labels=["h", "i"], affine=False)


def check_datum(D):
    """Return a list of violated invariants (empty when everything holds)."""
    errs = []
    a, n = D.a, D.n
    for i in range(n):
        if a[i][i] != 2:
            errs.append("a[%d][%d] != 2" % (i, i))
        for j in range(n):
            if i != j:
                if a[i][j] > 0:
                    errs.append("positive off-diagonal at (%d,%d)" % (i, j))
                if (a[i][j] == 0) != (a[j][i] == 0):
                    errs.append("zero pattern not symmetric at (%d,%d)" % (i, j))
            if D.d[i] * a[i][j] != D.d[j] * a[j][i]:
                errs.append("not symmetrized at (%d,%d)" % (i, j))
    if min(D.d) < 1 or gcd(*D.d) != 1:
        errs.append("symmetrizer not minimal positive")
    if D.affine:
        for j in range(n):
            if sum(D.c[i] * a[i][j] for i in range(n)) != 0:
                errs.append("c fails left null identity at column %d" % j)
        m = D.marks()
        for i in range(n):
            if sum(a[i][j] * m[j] for j in range(n)) != 0:
                errs.append("marks fail right null identity at row %d" % i)
        if list(D.c) != list(D.levels):
            errs.append("levels %s differ from central coefficients %s" % (D.levels, D.c))
    return errs
