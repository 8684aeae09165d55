"""
Nilpotent orbits of classical Lie algebras and the Springer correspondence.

Orbits are labelled by Jordan types.  The component group A(e) is taken for
the adjoint group.  For B and D it is generated by the distinct odd parts,
for C by the distinct even parts; a character is a sign vector over those
parts, taken modulo the relations spelled out in ComponentGroup.

The correspondence uses symbols normalized so that entries in one row differ
by at least two:

    top_i = alpha_i + 2i,   bottom_i = beta_i + 2i + shift      (i >= 0)

with alpha, beta padded by zeros and sorted increasingly, shift = 1 in type C
and 0 otherwise.  In this normalization two characters come from the same
orbit exactly when their symbols have the same multiset of entries.  Within
a class the local systems are read off from the runs of consecutive
singles (entries lying in one row only): the k-th run belongs to the k-th
smallest generator part (in C the first run comes from the zero padding and
never moves), and a character with value -1 on a part moves that run to the
other row.
"""

from collections import Counter, namedtuple
from functools import lru_cache
from itertools import combinations, product

from . import partitions as P
from .weyl import CharLabel, WeylType, d_canonical, degrees, fmt_char, weyl


class InvalidSymbol(ValueError):
    pass


class NilpotentOrbit(namedtuple("NilpotentOrbit", "family rank lam tag")):
    __slots__ = ()

    @property
    def weyl_type(self):
        return WeylType(self.family, self.rank)

    @property
    def k(self):
        return len(self.lam)

    @property
    def r(self):
        return sum(1 for p in self.lam if p != 1)

    def __str__(self):
        s = P.fmt_partition(self.lam)
        return s + (":" + self.tag if self.tag else "")


def parse_orbit(s, family, rank):
    tag = None
    if ":" in s:
        s, tag = s.split(":")
    lam = P.parse_partition(s)
    if not P.orbit_valid(family, rank, lam):
        raise ValueError("%s is not a nilpotent orbit of type %s%d" % (s, family, rank))
    ve = family == "D" and P.is_very_even(lam)
    if ve and tag not in ("I", "II"):
        raise ValueError("very even orbit %s needs :I or :II" % s)
    if not ve and tag:
        raise ValueError("only very even orbits carry a tag")
    return NilpotentOrbit(family, rank, lam, tag)


def _orbit_size(family, rank):
    return rank + 1 if family == "A" else (2 * rank + 1 if family == "B" else 2 * rank)


@lru_cache(maxsize=None)
def _orbits(family, rank):
    out = []
    for lam in P.partitions(_orbit_size(family, rank)):
        if not P.orbit_valid(family, rank, lam):
            continue
        if family == "D" and P.is_very_even(lam):
            out.append(NilpotentOrbit(family, rank, lam, "I"))
            out.append(NilpotentOrbit(family, rank, lam, "II"))
        else:
            out.append(NilpotentOrbit(family, rank, lam, None))
    return tuple(out)


def orbits(wt):
    wt = WeylType(*wt) if not isinstance(wt, WeylType) else wt
    return list(_orbits(wt.family, wt.rank))


def closure_leq(o1, o2):
    if (o1.family, o1.rank) != (o2.family, o2.rank):
        raise ValueError("orbits of different groups")
    if o1.lam == o2.lam:
        return o1.tag == o2.tag
    return P.dominates(o2.lam, o1.lam)


def orbit_dim(o):
    lc = P.conjugate(o.lam)
    sq = sum(x * x for x in lc)
    odd = sum(1 for p in o.lam if p % 2)
    n = o.rank
    if o.family == "A":
        return (n + 1) ** 2 - sq
    if o.family == "B":
        return 2 * n * n + n - (sq - odd) // 2
    if o.family == "C":
        return 2 * n * n + n - (sq + odd) // 2
    return 2 * n * n - n - (sq - odd) // 2


def dim_springer_fiber(o):
    _, N, _ = degrees(o.weyl_type)
    return N - orbit_dim(o) // 2


# component groups

class ComponentGroup:
    """A(e) for the adjoint group, as a quotient of (Z/2)^parts.

    Characters are sign vectors eps over `parts`.  B, D: eps and -eps are
    the same character.  C, D: eps must satisfy prod eps_v = 1 over parts of
    odd multiplicity.  Elements are sign vectors a over `parts`; B, D: prod
    a_v = 1.  C, D: a is taken modulo the image z_v = (-1)^{m_v} of the
    centre.
    """

    def __init__(self, orbit):
        self.orbit = orbit
        fam = orbit.family
        c = Counter(orbit.lam)
        if fam == "A":
            self.parts = ()
        elif fam == "C":
            self.parts = tuple(sorted(v for v in c if v % 2 == 0))
        else:
            self.parts = tuple(sorted(v for v in c if v % 2 == 1))
        self.mult = {v: c[v] for v in self.parts}
        self.flip = fam in "BD"
        self.z = tuple((-1) ** self.mult[v] for v in self.parts) if fam in "CD" else None

    def _char_ok(self, eps):
        if self.orbit.family in "CD":
            p = 1
            for v, e in zip(self.parts, eps):
                if self.mult[v] % 2:
                    p *= e
            if p != 1:
                return False
        return True

    def normalize_char(self, eps):
        eps = tuple(eps)
        if self.flip and eps and eps[-1] == -1:
            eps = tuple(-e for e in eps)
        return eps

    def characters(self):
        out = []
        for eps in product((1, -1), repeat=len(self.parts)):
            if self.flip and eps and eps[-1] == -1:
                continue
            if self._char_ok(eps):
                out.append(eps)
        return out

    def trivial_char(self):
        return tuple([1] * len(self.parts))

    def elements(self):
        out = []
        seen = set()
        for a in product((1, -1), repeat=len(self.parts)):
            if self.flip:
                p = 1
                for x in a:
                    p *= x
                if p != 1:
                    continue
            key = self._elt_key(a)
            if key in seen:
                continue
            seen.add(key)
            out.append(key)
        return out

    def _elt_key(self, a):
        if self.z is None:
            return tuple(a)
        b = tuple(x * y for x, y in zip(a, self.z))
        return min(tuple(a), b, key=lambda t: [x < 0 for x in t])

    def order(self):
        return len(self.elements())

    def value(self, eps, a):
        v = 1
        for e, x in zip(eps, a):
            if x == -1:
                v *= e
        return v

    def multiply(self, e1, e2):
        return self.normalize_char(tuple(x * y for x, y in zip(e1, e2)))

    def basis(self):
        """Elements of A(e) forming an F_2-basis, greedily chosen."""
        if not hasattr(self, "_basis"):
            chosen, span = [], {self._elt_key(tuple([1] * len(self.parts)))}
            for a in self.elements():
                if a in span:
                    continue
                chosen.append(a)
                span |= {self._elt_key(tuple(x * y for x, y in zip(a, s))) for s in span}
            self._basis = chosen
        return self._basis

    def basis_labels(self):
        """Each basis element named by the parts on which it is -1."""
        return [",".join(str(v) for v, x in zip(self.parts, a) if x == -1) for a in self.basis()]

    def phi_vector(self, eps):
        return [self.value(eps, a) for a in self.basis()]

    def from_phi_vector(self, vec):
        vec = list(vec)
        for eps in self.characters():
            if self.phi_vector(eps) == vec:
                return eps
        raise ValueError("not a character of A(e): %r" % (vec,))


def component_group(o):
    return ComponentGroup(o)


# symbols

class Symbol(namedtuple("Symbol", "family top bottom")):
    """Two rows of nonnegative integers, strictly increasing by at least 2."""
    __slots__ = ()

    def key(self):
        if self.family == "D":
            return tuple(sorted((self.top, self.bottom)))
        return (self.top, self.bottom)

    def entries(self):
        return tuple(sorted(self.top + self.bottom))

    def __str__(self):
        return "(%s / %s)" % (" ".join(map(str, self.top)), " ".join(map(str, self.bottom)))

    def reduced(self):
        """Drop padding columns: a leading (0, shift) pair."""
        sh = _shift(self.family)
        t, b = list(self.top), list(self.bottom)
        while t and b and t[0] == 0 and b[0] == sh and \
                (self.family != "D" or len(t) > 1):
            t = [x - 2 for x in t[1:]]
            b = [x - 2 for x in b[1:]]
        return Symbol(self.family, tuple(t), tuple(b))


def _shift(family):
    return 1 if family == "C" else 0


def symbol_from_bipartition(family, alpha, beta, M):
    la, lb = (M + 1, M) if family in "BC" else (M, M)
    if len(alpha) > la or len(beta) > lb:
        raise InvalidSymbol("padding too small")
    A = sorted(list(alpha) + [0] * (la - len(alpha)))
    B = sorted(list(beta) + [0] * (lb - len(beta)))
    sh = _shift(family)
    return Symbol(family, tuple(x + 2 * i for i, x in enumerate(A)),
                  tuple(x + 2 * i + sh for i, x in enumerate(B)))


def bipartition_of(S):
    """CharLabel of a symbol."""
    sh = _shift(S.family)
    for row in (S.top, S.bottom):
        if any(b - a < 2 for a, b in zip(row, row[1:])):
            raise InvalidSymbol("row entries must increase by at least 2: %s" % (row,))
    a = [x - 2 * i for i, x in enumerate(S.top)]
    b = [x - 2 * i - sh for i, x in enumerate(S.bottom)]
    if (a and a[0] < 0) or (b and b[0] < 0):
        raise InvalidSymbol("negative entry after normalization")
    if S.family in "BC" and len(S.top) != len(S.bottom) + 1:
        raise InvalidSymbol("first row must be one longer")
    if S.family == "D" and len(S.top) != len(S.bottom):
        raise InvalidSymbol("rows must have equal length")
    alpha, beta = P.normalize(a), P.normalize(b)
    if S.family == "D":
        alpha, beta = d_canonical(alpha, beta)
    return CharLabel(alpha, beta, None)


def _lamstar_rows(family, lam):
    inc = sorted(lam)
    if family == "C" and len(inc) % 2 == 0:
        inc = [0] + inc
    if family in "BD" and len(inc) % 2 == (1 if family == "D" else 0):
        inc = [0] + inc
    top, bot = [], []
    for i, v in enumerate(inc):
        x = v + i
        to_top = (x % 2 == 0) if family == "C" else (x % 2 == 1)
        (top if to_top else bot).append(x // 2)
    a = P.normalize(t - i for i, t in enumerate(sorted(top)))
    b = P.normalize(t - i for i, t in enumerate(sorted(bot)))
    return a, b


def trivial_char(o):
    """Springer character of the trivial local system."""
    if o.family == "A":
        return CharLabel(o.lam, None, None)
    a, b = _lamstar_rows(o.family, o.lam)
    if o.family == "D":
        a, b = d_canonical(a, b)
        if a == b:
            return CharLabel(a, b, o.tag)
    return CharLabel(a, b, None)


def symbol_of(o, M=None):
    """Symbol of the trivial local system on o (padded with M columns)."""
    if o.family == "A":
        raise InvalidSymbol("symbols are defined for B, C, D only")
    x = trivial_char(o)
    return symbol_from_bipartition(o.family, x.alpha, x.beta, M or o.rank + 1)


def similar_symbols(S):
    """All symbols with the same entries and row lengths."""
    ents = Counter(S.entries())
    doubles = [v for v, m in ents.items() if m == 2]
    singles = sorted(v for v, m in ents.items() if m == 1)
    ntop = len(S.top) - len(doubles)
    out = set()
    for pick in combinations(singles, ntop):
        top = tuple(sorted(doubles + list(pick)))
        bot = tuple(sorted(doubles + [v for v in singles if v not in pick]))
        T = Symbol(S.family, top, bot)
        try:
            bipartition_of(T)
        except InvalidSymbol:
            continue
        out.add(T.key())
    return {Symbol(S.family, *k) for k in out}


def _runs(S):
    c = Counter(S.top + S.bottom)
    out = []
    for v in sorted(x for x in c if c[x] == 1):
        if out and out[-1][-1] == v - 1:
            out[-1].append(v)
        else:
            out.append([v])
    return out


SpringerDatum = namedtuple("SpringerDatum", "orbit phi char")


def _local_systems(o):
    """[(phi, CharLabel)] for the characters of A(e) that occur."""
    if o.family == "A":
        return [((), CharLabel(o.lam, None, None))]
    G = ComponentGroup(o)
    S = symbol_of(o)
    x0 = trivial_char(o)
    if not G.parts:
        return [((), x0)]
    runs = _runs(S)
    labels = ([0] if o.family == "C" else []) + list(G.parts)
    if len(runs) != len(labels):
        raise InvalidSymbol("run structure of %s does not match A(e) for %s" % (S, o))
    run_of = dict(zip(labels, runs))
    out = []
    for eps in G.characters():
        moved = set()
        for v, e in zip(G.parts, eps):
            if e == -1:
                moved.update(run_of[v])
        top = set(S.top)
        bot = set(S.bottom)
        for v in moved:
            if v in top:
                top.remove(v)
                bot.add(v)
            else:
                bot.remove(v)
                top.add(v)
        if G.flip and len(top) != len(S.top):
            # eps and -eps agree; use the complementary move
            top, bot = set(S.top), set(S.bottom)
            for v in set().union(*runs) - moved:
                if v in top:
                    top.remove(v)
                    bot.add(v)
                else:
                    bot.remove(v)
                    top.add(v)
        if len(top) != len(S.top):
            continue
        T = Symbol(o.family, tuple(sorted(top)), tuple(sorted(bot)))
        try:
            x = bipartition_of(T)
        except InvalidSymbol:
            continue
        out.append((eps, x))
    return out


@lru_cache(maxsize=None)
def _correspondence(family, rank):
    out = []
    for o in _orbits(family, rank):
        for eps, x in _local_systems(o):
            out.append(SpringerDatum(o, eps, x))
    return tuple(out)


def springer_correspondence(wt):
    wt = WeylType(*wt) if not isinstance(wt, WeylType) else wt
    return list(_correspondence(wt.family, wt.rank))


def datum_json(d):
    G = ComponentGroup(d.orbit)
    return {"orbit": str(d.orbit), "phi": G.phi_vector(d.phi), "char": fmt_char(d.char)}


def check_bijection(wt):
    """Every irreducible character appears exactly once."""
    W = weyl(wt)
    got = Counter(d.char for d in springer_correspondence(W.type))
    return all(got[x] == 1 for x in W.chars) and len(got) == len(W.chars)
