"""
Weyl groups of classical type: classes, character tables, and the class
sums built on them (fake degrees, Molien series, exterior powers).

Elements of B_n, C_n, D_n are signed permutations, stored as a tuple t
with w(e_i) = sign(t[i]) * e_{|t[i]|-1}.  A_n is S_{n+1} acting on the
sum-zero hyperplane.  B_n and C_n share a Weyl group; they differ only in
the root system (see arrangements).

Characters of B_n come from the Murnaghan-Nakayama rule for the wreath
product Z/2 wr S_n.  A rim hook of length r removed from beta picks up an
extra -1 when the cycle being removed is negative.  With this convention
([n], -) is trivial and (-, [1^n]) is the sign character.
"""

import json
import os
from collections import Counter, namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

import numpy as np

from . import partitions as P
from .poly import UniPoly, BiPoly, RatFunc, lcm

CACHE_VERSION = 3

_cache_enabled = True


def set_cache_enabled(flag):
    global _cache_enabled
    _cache_enabled = bool(flag)


class TypeMismatch(TypeError):
    pass


class WeylType(namedtuple("WeylType", "family rank")):
    __slots__ = ()

    def __new__(cls, family, rank):
        family = family.upper()
        if family not in "ABCD" or len(family) != 1:
            raise ValueError("family must be one of A, B, C, D")
        rank = int(rank)
        if rank < 1 or (family == "D" and rank < 2):
            raise ValueError("rank too small for type %s" % family)
        return super().__new__(cls, family, rank)

    def __str__(self):
        return "%s%d" % self

    @classmethod
    def parse(cls, s):
        s = s.strip().replace("_", "")
        return cls(s[0], int(s[1:]))

    @property
    def order(self):
        n = self.rank
        if self.family == "A":
            return factorial(n + 1)
        o = 2 ** n * factorial(n)
        return o // 2 if self.family == "D" else o


ClassLabel = namedtuple("ClassLabel", "mu nu tag")
CharLabel = namedtuple("CharLabel", "alpha beta tag")


def fmt_class(c):
    if c.nu is None:
        return P.fmt_partition(c.mu)
    s = "%s;%s" % (P.fmt_partition(c.mu), P.fmt_partition(c.nu))
    return s + (c.tag or "")


def parse_class(s, family):
    s = s.strip()
    if family == "A":
        return ClassLabel(P.parse_partition(s), None, None)
    tag = None
    if s[-1] in "+-":
        tag, s = s[-1], s[:-1]
    mu, nu = s.split(";")
    return ClassLabel(P.parse_partition(mu), P.parse_partition(nu), tag)


def fmt_char(x):
    if x.beta is None:
        return P.fmt_partition(x.alpha)
    s = P.fmt_bipartition(x.alpha, x.beta)
    return s + (":" + x.tag if x.tag else "")


def parse_char(s, family):
    s = s.strip()
    if family == "A":
        return CharLabel(P.parse_partition(s), None, None)
    tag = None
    if ":" in s:
        s, tag = s.split(":")
        if tag not in ("I", "II"):
            raise ValueError("tag must be I or II")
    a, b = P.parse_bipartition(s)
    if family == "D":
        a, b = d_canonical(a, b)
        if a == b and tag is None:
            raise ValueError("degenerate D label needs :I or :II")
    return CharLabel(a, b, tag)


def d_canonical(a, b):
    """Canonical order for an unordered D label: larger |.|, then larger tuple."""
    return max((a, b), (b, a), key=lambda ab: (sum(ab[0]), ab[0], ab[1]))


def degrees(wt):
    """(fundamental degrees, N, Coxeter number)."""
    f, n = wt
    if f == "A":
        ds = list(range(2, n + 2))
    elif f in "BC":
        ds = list(range(2, 2 * n + 1, 2))
    else:
        ds = list(range(2, 2 * n - 1, 2)) + [n]
    return ds, sum(d - 1 for d in ds), max(ds)


# signed permutations

def compose(w, v):
    """w o v."""
    out = []
    for t in v:
        j = abs(t) - 1
        s = 1 if t > 0 else -1
        out.append(s * w[j])
    return tuple(out)


def inverse(w):
    out = [0] * len(w)
    for i, t in enumerate(w):
        j = abs(t) - 1
        out[j] = (i + 1) if t > 0 else -(i + 1)
    return tuple(out)


def power(w, k):
    r = tuple(range(1, len(w) + 1))
    b = w
    while k:
        if k & 1:
            r = compose(b, r)
        b = compose(b, b)
        k >>= 1
    return r


def signed_cycles(w):
    """List of (length, sign) over the cycles of w."""
    seen = [False] * len(w)
    out = []
    for i in range(len(w)):
        if seen[i]:
            continue
        j, ln, sg = i, 0, 1
        while not seen[j]:
            seen[j] = True
            t = w[j]
            sg *= 1 if t > 0 else -1
            j = abs(t) - 1
            ln += 1
        out.append((ln, sg))
    return out


def _split_tag(w):
    """+ if w is conjugate to a plain permutation by an even sign change."""
    n = len(w)
    d = [0] * n
    for i in range(n):
        if d[i]:
            continue
        d[i] = 1
        j = i
        while True:
            t = w[j]
            k = abs(t) - 1
            # we want d_k * sign(t) * d_j = 1
            want = d[j] * (1 if t > 0 else -1)
            if d[k]:
                break
            d[k] = want
            j = k
    neg = sum(1 for x in d if x < 0)
    return "+" if neg % 2 == 0 else "-"


def classify(wt, w):
    if wt.family == "A":
        return ClassLabel(P.normalize(l for l, _ in signed_cycles(w)), None, None)
    cyc = signed_cycles(w)
    mu = P.normalize(l for l, s in cyc if s > 0)
    nu = P.normalize(l for l, s in cyc if s < 0)
    tag = None
    if wt.family == "D" and not nu and all(m % 2 == 0 for m in mu):
        tag = _split_tag(w)
    return ClassLabel(mu, nu, tag)


def _rep_from_cycles(cycles, n):
    """Signed permutation with the given (length, sign) cycles on 1..n."""
    w = [0] * n
    pos = 0
    for ln, sg in cycles:
        idx = list(range(pos, pos + ln))
        for a, i in enumerate(idx):
            j = idx[(a + 1) % ln]
            w[i] = j + 1
        if sg < 0:
            w[idx[-1]] = -w[idx[-1]]
        pos += ln
    return tuple(w)


def representative(wt, c):
    n = wt.rank
    if wt.family == "A":
        return _rep_from_cycles([(l, 1) for l in c.mu], n + 1)
    w = _rep_from_cycles([(l, 1) for l in c.mu] + [(l, -1) for l in c.nu], n)
    if c.tag == "-":
        d = tuple([-1] + list(range(2, n + 1)))
        w = compose(d, compose(w, d))
    return w


def simple_reflections(wt):
    f, n = wt
    m = n + 1 if f == "A" else n
    ident = list(range(1, m + 1))
    out = []
    for i in range(n - 1 if f != "A" else n):
        s = list(ident)
        s[i], s[i + 1] = s[i + 1], s[i]
        out.append(tuple(s))
    if f in "BC":
        s = list(ident)
        s[n - 1] = -n
        out.append(tuple(s))
    elif f == "D":
        s = list(ident)
        s[n - 2], s[n - 1] = -n, -(n - 1)
        out.append(tuple(s))
    return out


def generate(gens, degree):
    ident = tuple(range(1, degree + 1))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def elements(wt):
    f, n = wt
    if f == "A":
        return [tuple(p) for p in permutations(range(1, n + 2))]
    out = []
    for p in permutations(range(1, n + 1)):
        for mask in range(2 ** n):
            signs = [(-1) ** ((mask >> i) & 1) for i in range(n)]
            if f == "D" and signs.count(-1) % 2:
                continue
            out.append(tuple(s * x for s, x in zip(signs, p)))
    return out


def matrix(w):
    n = len(w)
    m = [[0] * n for _ in range(n)]
    for i, t in enumerate(w):
        m[abs(t) - 1][i] = 1 if t > 0 else -1
    return m


# Murnaghan-Nakayama

def _beta(lam, k):
    lam = list(lam) + [0] * (k - len(lam))
    return tuple(sorted((lam[i] + k - 1 - i for i in range(k)), reverse=True))


def _from_beta(bs):
    k = len(bs)
    return P.normalize(b - (k - 1 - i) for i, b in enumerate(sorted(bs, reverse=True)))


def _rim_hooks(lam, r):
    """Yield (lam minus an r-rim hook, (-1)^height)."""
    k = len(lam) + r
    bs = _beta(lam, k)
    bset = set(bs)
    for b in bs:
        if b - r >= 0 and (b - r) not in bset:
            ht = sum(1 for x in bs if b - r < x < b)
            nb = [x for x in bs if x != b] + [b - r]
            yield _from_beta(nb), (-1) ** ht


@lru_cache(maxsize=None)
def sn_char(lam, mu):
    """Character of S_n irrep lam on cycle type mu."""
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    return sum(s * sn_char(l2, rest) for l2, s in _rim_hooks(lam, r))


@lru_cache(maxsize=None)
def bn_char(alpha, beta, cycles):
    """chi^{alpha,beta} on a class given as a sorted tuple of (length, sign)."""
    if not cycles:
        return 1 if not alpha and not beta else 0
    (r, s), rest = cycles[0], cycles[1:]
    tot = 0
    if sum(alpha) >= r:
        for a2, sg in _rim_hooks(alpha, r):
            tot += sg * bn_char(a2, beta, rest)
    if sum(beta) >= r:
        for b2, sg in _rim_hooks(beta, r):
            tot += sg * s * bn_char(alpha, b2, rest)
    return tot


def _cycles_key(mu, nu):
    return tuple(sorted([(l, 1) for l in mu] + [(l, -1) for l in nu], reverse=True))


class Weyl:
    """Classes, characters and table for one WeylType."""

    def __init__(self, wt, use_cache=None):
        self.type = wt
        self.family, self.rank = wt
        self.order = wt.order
        self.degrees, self.N, self.h = degrees(wt)
        self._build_classes()
        if use_cache is None:
            use_cache = _cache_enabled
        tab = _load_cache(wt) if use_cache else None
        if tab is None or tab[0] != self.chars:
            self._build_table()
            if use_cache:
                _save_cache(self)
        else:
            self.table = tab[1]
        self.class_index = {c: i for i, c in enumerate(self.classes)}
        self.char_index = {x: i for i, x in enumerate(self.chars)}
        self._powermaps = {}

    # classes

    def _build_classes(self):
        f, n = self.type
        cl, sizes, polys = [], [], []
        x = UniPoly.monomial(1)
        if f == "A":
            for mu in P.partitions(n + 1):
                cl.append(ClassLabel(mu, None, None))
                sizes.append(self.order // P.z_lambda(mu))
                p = UniPoly.const(1)
                for m in mu:
                    p = p * (x ** m - 1)
                polys.append(p.exact_div(x - 1))
        else:
            for mu, nu in P.bipartitions(n):
                if f == "D" and len(nu) % 2:
                    continue
                size = (2 ** n * factorial(n)) // (P.z_lambda(mu) * P.z_lambda(nu) * 2 ** (len(mu) + len(nu)))
                p = UniPoly.const(1)
                for m in mu:
                    p = p * (x ** m - 1)
                for m in nu:
                    p = p * (x ** m + 1)
                if f == "D" and not nu and all(m % 2 == 0 for m in mu):
                    for tag in "+-":
                        cl.append(ClassLabel(mu, nu, tag))
                        sizes.append(size // 2)
                        polys.append(p)
                else:
                    cl.append(ClassLabel(mu, nu, None))
                    sizes.append(size)
                    polys.append(p)
        self.classes = cl
        self.sizes = sizes
        self.char_polys = polys
        self.reps = [representative(self.type, c) for c in cl]
        if f == "A":
            self.identity = ClassLabel(tuple([1] * (n + 1)), None, None)
        else:
            self.identity = ClassLabel(tuple([1] * n), (), None)
        self.chars = self._char_labels()

    def _char_labels(self):
        f, n = self.type
        if f == "A":
            return [CharLabel(l, None, None) for l in P.partitions(n + 1)]
        if f in "BC":
            return [CharLabel(a, b, None) for a, b in P.bipartitions(n)]
        out = []
        seen = set()
        for a, b in P.bipartitions(n):
            a, b = d_canonical(a, b)
            if (a, b) in seen:
                continue
            seen.add((a, b))
            if a == b:
                out.append(CharLabel(a, b, "I"))
                out.append(CharLabel(a, b, "II"))
            else:
                out.append(CharLabel(a, b, None))
        return out

    def _build_table(self):
        f, n = self.type
        rows = []
        for x in self.chars:
            row = []
            for c in self.classes:
                if f == "A":
                    row.append(sn_char(x.alpha, c.mu))
                    continue
                v = bn_char(x.alpha, x.beta, _cycles_key(c.mu, c.nu))
                if f == "D" and x.tag:
                    # degenerate pair: half the B value, corrected on split classes
                    corr = 0
                    if c.tag:
                        kappa = tuple(m // 2 for m in c.mu)
                        corr = 2 ** len(kappa) * sn_char(x.alpha, kappa)
                        sg = 1 if (c.tag == "+") == (x.tag == "I") else -1
                        corr *= sg
                    v = (v + corr) // 2
                row.append(v)
            rows.append(row)
        self.table = rows

    # basic accessors

    def char(self, label):
        if isinstance(label, str):
            label = parse_char(label, self.family)
        return ClassFunction(self, self.table[self.char_index[label]])

    def trivial_label(self):
        n = self.rank
        if self.family == "A":
            return CharLabel((n + 1,), None, None)
        return CharLabel((n,), (), None)

    def sign_label(self):
        n = self.rank
        if self.family == "A":
            return CharLabel(tuple([1] * (n + 1)), None, None)
        if self.family == "D":
            return CharLabel(*d_canonical((), tuple([1] * n)), None)
        return CharLabel((), tuple([1] * n), None)

    def trivial(self):
        return ClassFunction(self, [1] * len(self.classes))

    def sign(self):
        n = self.rank
        return ClassFunction(self, [(-1) ** n * p[0] for p in self.char_polys])

    def reflection(self):
        """Character of V: sum of eigenvalues, read off the char poly."""
        n = self.rank
        return ClassFunction(self, [-p[n - 1] for p in self.char_polys])

    def det_one_minus_q(self, i):
        return self.char_polys[i].reverse(self.rank)

    def det_one_plus_y(self, i):
        n = self.rank
        p = self.char_polys[i]
        return BiPoly({(0, n - k): p[k] * (-1) ** (n - k) for k in range(n + 1)})

    def fixed_dim(self, i):
        """Multiplicity of the eigenvalue 1."""
        p = self.char_polys[i]
        d = 0
        x1 = UniPoly((-1, 1))
        while p and not p(1):
            p = p.exact_div(x1)
            d += 1
        return d

    def power_map(self, k):
        if k not in self._powermaps:
            self._powermaps[k] = [self.class_index[classify(self.type, power(w, k))] for w in self.reps]
        return self._powermaps[k]

    # class sums

    def inner(self, f, g):
        tot = 0
        for s, a, b in zip(self.sizes, f, g):
            if a and b:
                tot = tot + a * b * s
        if isinstance(tot, int):
            return Fraction(tot, self.order)
        return tot * Fraction(1, self.order)

    def decompose(self, f):
        """Multiplicities of each irreducible in a class function."""
        vals = f.values if isinstance(f, ClassFunction) else f
        return {x: self.inner(self.table[i], vals) for i, x in enumerate(self.chars)}

    @property
    def _coinv_polys(self):
        if not hasattr(self, "_cp"):
            top = UniPoly.const(1)
            for d in self.degrees:
                top = top * (1 - UniPoly.monomial(d))
            self._cp = [top.exact_div(self.det_one_minus_q(i)) for i in range(len(self.classes))]
        return self._cp

    def fake_degree(self, label):
        row = self.table[self.char_index[label]]
        tot = UniPoly()
        for s, v, p in zip(self.sizes, row, self._coinv_polys):
            if v:
                tot = tot + p.scale(s * v)
        return tot.scale(Fraction(1, self.order))

    def _molien_base(self):
        if not hasattr(self, "_mb"):
            dens = [self.det_one_minus_q(i) for i in range(len(self.classes))]
            L = UniPoly.const(1)
            for d in dens:
                L = lcm(L, d)
            self._ml = L
            self._mb = [self.det_one_plus_y(i) * BiPoly.coerce(L.exact_div(d)) for i, d in enumerate(dens)]
        return self._mb

    def molien_tau(self, label):
        if isinstance(label, ClassFunction):
            row = label.values
        else:
            row = self.table[self.char_index[label]]
        base = self._molien_base()
        num = BiPoly()
        for s, v, b in zip(self.sizes, row, base):
            if v:
                num = num + b.scale(s * v)
        return RatFunc(num, self._ml.scale(self.order))

    def induce_trivial(self, J):
        """Ind_{W_J}^W of the trivial character; J is a set of simple-root indices (1-based)."""
        gens = simple_reflections(self.type)
        sub = [gens[j - 1] for j in sorted(J)]
        deg = len(gens[0])
        els = generate(sub, deg)
        cnt = Counter(self.class_index[classify(self.type, w)] for w in els)
        vals = []
        for i, s in enumerate(self.sizes):
            vals.append(Fraction(self.order * cnt.get(i, 0), len(els) * s))
        return ClassFunction(self, vals)

    def lambda_power(self, f, k):
        vals = f.values if isinstance(f, ClassFunction) else list(f)
        lam = [[Fraction(1)] * len(vals)]
        for m in range(1, k + 1):
            acc = [Fraction(0)] * len(vals)
            for i in range(1, m + 1):
                pm = self.power_map(i)
                sg = 1 if i % 2 else -1
                prev = lam[m - i]
                for c in range(len(vals)):
                    acc[c] += sg * vals[pm[c]] * prev[c]
            lam.append([a / m for a in acc])
        return ClassFunction(self, lam[k])

    def degree_of(self, label):
        return self.table[self.char_index[label]][self.class_index[self.identity]]


class ClassFunction:
    __slots__ = ("weyl", "values")

    def __init__(self, weyl, values):
        self.weyl = weyl
        self.values = list(values)

    def __getitem__(self, c):
        if isinstance(c, int):
            return self.values[c]
        return self.values[self.weyl.class_index[c]]

    def _check(self, other):
        if not isinstance(other, ClassFunction) or other.weyl.type != self.weyl.type:
            raise TypeMismatch("class functions on different groups")

    def __add__(self, other):
        self._check(other)
        return ClassFunction(self.weyl, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check(other)
        return ClassFunction(self.weyl, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.weyl, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.weyl, [a * other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ClassFunction) and other.weyl.type == self.weyl.type \
            and all(a == b for a, b in zip(self.values, other.values))

    def as_dict(self):
        return dict(zip(self.weyl.classes, self.values))

    def __repr__(self):
        return "ClassFunction(%s, %s)" % (self.weyl.type, self.values)


class GradedCharacter:
    """Element of R(W)[q]: irreducible label -> UniPoly."""

    __slots__ = ("weyl", "mult")

    def __init__(self, weyl, mult):
        self.weyl = weyl
        self.mult = {k: UniPoly.coerce(v) for k, v in mult.items() if UniPoly.coerce(v)}

    def __getitem__(self, label):
        return self.mult.get(label, UniPoly())

    def __add__(self, other):
        m = dict(self.mult)
        for k, v in other.mult.items():
            m[k] = m.get(k, UniPoly()) + v
        return GradedCharacter(self.weyl, m)

    def __eq__(self, other):
        return isinstance(other, GradedCharacter) and self.mult == other.mult

    def scale(self, p):
        return GradedCharacter(self.weyl, {k: v * p for k, v in self.mult.items()})

    def evaluate(self, q):
        """Ungraded class function at q."""
        W = self.weyl
        vals = [Fraction(0)] * len(W.classes)
        for k, p in self.mult.items():
            row = W.table[W.char_index[k]]
            pv = p(q)
            for i, v in enumerate(row):
                vals[i] += pv * v
        return ClassFunction(W, vals)

    def __repr__(self):
        return "GradedCharacter(%s)" % {fmt_char(k): str(v) for k, v in self.mult.items()}


def inner_product(f, g):
    """<f, g>; class functions give a rational, graded characters a UniPoly."""
    if isinstance(f, ClassFunction) and isinstance(g, ClassFunction):
        if f.weyl.type != g.weyl.type:
            raise TypeMismatch("different groups")
        return f.weyl.inner(f.values, g.values)
    W = f.weyl
    if g.weyl.type != W.type:
        raise TypeMismatch("different groups")
    a = f.mult if isinstance(f, GradedCharacter) else W.decompose(f)
    b = g.mult if isinstance(g, GradedCharacter) else W.decompose(g)
    tot = UniPoly()
    for k, v in a.items():
        if k in b and b[k]:
            tot = tot + UniPoly.coerce(v) * b[k]
    return tot


# disk cache

def cache_dir():
    d = os.environ.get("SPRINGERKIT_CACHE")
    if d:
        return d
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return os.path.join(base, "springerkit")


def _cache_path(wt):
    return os.path.join(cache_dir(), "%s%d.json" % wt)


def _load_cache(wt):
    try:
        with open(_cache_path(wt)) as fh:
            d = json.load(fh)
    except (OSError, ValueError):
        return None
    if d.get("version") != CACHE_VERSION:
        return None
    try:
        chars = [parse_char(s, wt.family) for s in d["chars"]]
        table = [[int(v) for v in row] for row in d["table"]]
    except (KeyError, ValueError, TypeError):
        return None
    return chars, table


def _save_cache(W):
    d = {"version": CACHE_VERSION, "type": str(W.type),
         "classes": [fmt_class(c) for c in W.classes],
         "chars": [fmt_char(x) for x in W.chars],
         "table": W.table}
    try:
        os.makedirs(cache_dir(), exist_ok=True)
        tmp = _cache_path(W.type) + ".tmp%d" % os.getpid()
        with open(tmp, "w") as fh:
            json.dump(d, fh)
        os.replace(tmp, _cache_path(W.type))
    except OSError:
        pass


@lru_cache(maxsize=None)
def get_weyl(family, rank):
    return Weyl(WeylType(family, rank))


def weyl(wt):
    if isinstance(wt, str):
        wt = WeylType.parse(wt)
    return get_weyl(*wt)


def table_array(W):
    """Character table as an integer numpy array, rows = W.chars."""
    return np.array(W.table, dtype=np.int64)


def check_tables(wt):
    """Row and column orthogonality and sum chi(1)^2 = |W|."""
    from .report import Report
    W = weyl(wt)
    rep = Report("character table %s" % str(W.type))
    X = table_array(W)
    sz = np.array(W.sizes, dtype=np.int64)
    k = len(W.classes)
    rep.checked += 3
    if X.shape != (k, k):
        rep.fail("table is %dx%d but there are %d classes" % (X.shape + (k,)))
        return rep
    if not np.array_equal((X * sz) @ X.T, W.order * np.eye(k, dtype=np.int64)):
        rep.fail("first orthogonality fails")
    cent = W.order // sz
    if not np.array_equal(X.T @ X, np.diag(cent)):
        rep.fail("second orthogonality fails")
    deg = X[:, W.class_index[W.identity]]
    if int(deg @ deg) != W.order:
        rep.fail("sum of squared degrees is %d, not |W|" % int(deg @ deg))
    if int(sz.sum()) != W.order:
        rep.fail("class sizes do not sum to |W|")
    triv = X[W.char_index[W.trivial_label()]]
    if not (triv == 1).all():
        rep.fail("trivial row is not all ones")
    return rep


# thin functional wrappers

def classes(wt):
    W = weyl(wt)
    return list(zip(W.classes, W.sizes, W.char_polys))


def character_table(wt):
    W = weyl(wt)
    return W.chars, W.classes, W.table


def fake_degree(wt, label):
    return weyl(wt).fake_degree(label)


def molien_tau(wt, label):
    return weyl(wt).molien_tau(label)


def induce_trivial(wt, J):
    return weyl(wt).induce_trivial(J)


def lambda_power(f, k):
    return f.weyl.lambda_power(f, k)
