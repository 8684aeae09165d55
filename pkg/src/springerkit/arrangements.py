"""
Restricted reflection arrangements A^J and their characteristic polynomials.

Roots live in the standard coordinates:

    A_n   e_i - e_j in R^{n+1}
    B_n   +-e_i +- e_j, +-e_i
    C_n   +-e_i +- e_j, +-2e_i
    D_n   +-e_i +- e_j

Simple roots are numbered from 1: alpha_i = e_i - e_{i+1}, and the last one
is e_n (B), 2e_n (C) or e_{n-1} + e_n (D).  J is a set of these indices.
For J, the arrangement A^J lives in V^{W_J} = the common kernel of J inside
the span of all roots, and consists of the distinct nonzero restrictions of
root hyperplanes.
"""

from collections import namedtuple
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .poly import UniPoly
from .weyl import WeylType, elements, weyl


class DimensionTooLarge(ValueError):
    pass


class FactorizationFailed(ArithmeticError):
    pass


class AmbiguousLevi(RuntimeError):
    pass


MAX_DIM = 8


def _wt(W):
    if isinstance(W, str):
        return WeylType.parse(W)
    if hasattr(W, "type"):
        return W.type
    return WeylType(*W)


class RootSystem:
    def __init__(self, wt):
        wt = _wt(wt)
        self.type = wt
        f, n = wt
        dim = n + 1 if f == "A" else n
        self.dim = dim

        def e(i, c=1):
            v = [0] * dim
            v[i] = c
            return v

        roots = set()
        for i in range(dim):
            for j in range(i + 1, dim):
                roots.add(tuple(a - b for a, b in zip(e(i), e(j))))
                if f != "A":
                    roots.add(tuple(a + b for a, b in zip(e(i), e(j))))
            if f == "B":
                roots.add(tuple(e(i)))
            elif f == "C":
                roots.add(tuple(e(i, 2)))
        roots |= {tuple(-x for x in r) for r in roots}
        self.roots = sorted(roots, reverse=True)
        simple = [tuple(a - b for a, b in zip(e(i), e(i + 1))) for i in range(dim - 1)]
        if f == "B":
            simple.append(tuple(e(n - 1)))
        elif f == "C":
            simple.append(tuple(e(n - 1, 2)))
        elif f == "D":
            simple.append(tuple(a + b for a, b in zip(e(n - 2), e(n - 1))))
        self.simple = simple
        self.N = len(self.roots) // 2

    def simple_root(self, i):
        return self.simple[i - 1]


def act(w, v):
    """Signed permutation w applied to a coordinate vector."""
    out = [0] * len(v)
    for i, t in enumerate(w):
        out[abs(t) - 1] = v[i] if t > 0 else -v[i]
    return tuple(out)


# rational linear algebra

def _rref(rows):
    M = [[Fraction(x) for x in r] for r in rows]
    piv = []
    r = 0
    ncol = len(M[0]) if M else 0
    for c in range(ncol):
        p = next((i for i in range(r, len(M)) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        lead = M[r][c]
        M[r] = [x / lead for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    return [tuple(row) for row in M[:r]], piv


def rank(rows):
    return len(_rref(rows)[0]) if rows else 0


def nullspace(rows, ncol):
    if not rows:
        return [tuple(Fraction(int(i == j)) for j in range(ncol)) for i in range(ncol)]
    R, piv = _rref(rows)
    free = [c for c in range(ncol) if c not in piv]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncol
        v[fc] = Fraction(1)
        for row, pc in zip(R, piv):
            v[pc] = -row[fc]
        out.append(tuple(v))
    return out


def _normalize_dir(v):
    lead = next(x for x in v if x)
    return tuple(Fraction(x) / lead for x in v)


RestrictedArrangement = namedtuple("RestrictedArrangement", "type J ambient hyperplanes")


def _ambient(R, J):
    """Basis of V^{W_J}: vectors in span(roots) orthogonal to the roots in J."""
    f = R.type.family
    eqs = [R.simple_root(j) for j in sorted(J)]
    if f == "A":
        eqs = eqs + [tuple([1] * R.dim)]
    return nullspace(eqs, R.dim)


def build_arrangement(wt, J=()):
    R = RootSystem(wt)
    J = frozenset(J)
    if any(not 1 <= j <= R.type.rank for j in J):
        raise ValueError("simple root index out of range in %s" % sorted(J))
    basis = _ambient(R, J)
    hyps = set()
    for a in R.roots:
        v = tuple(sum(Fraction(x) * y for x, y in zip(b, a)) for b in basis)
        if any(v):
            hyps.add(_normalize_dir(v))
    return RestrictedArrangement(R.type, J, basis, sorted(hyps))


def _flats(A):
    """Intersection lattice as {frozenset of hyperplane indices: rank}."""
    H = A.hyperplanes
    levels = [{frozenset(): 0}]
    allflats = {frozenset(): 0}
    for k in range(1, len(A.ambient) + 1):
        nxt = {}
        for X in levels[-1]:
            for h in range(len(H)):
                if h in X:
                    continue
                rows = [H[i] for i in X] + [H[h]]
                span, _ = _rref(rows)
                if len(span) != k:
                    continue
                clo = frozenset(i for i in range(len(H)) if rank(span + [H[i]]) == k)
                nxt[clo] = k
        if not nxt:
            break
        levels.append(nxt)
        allflats.update(nxt)
    return allflats


def characteristic_polynomial(A):
    m = len(A.ambient)
    if m > MAX_DIM:
        raise DimensionTooLarge("ambient dimension %d > %d" % (m, MAX_DIM))
    flats = _flats(A)
    order = sorted(flats, key=lambda X: flats[X])
    mu = {}
    chi = [0] * (m + 1)
    for X in order:
        if not X:
            mu[X] = 1
        else:
            mu[X] = -sum(mu[Y] for Y in order if flats[Y] < flats[X] and Y < X)
        chi[m - flats[X]] += mu[X]
    return UniPoly(chi)


def os_exponents(wt, J=()):
    chi = characteristic_polynomial(build_arrangement(wt, J))
    roots = []
    p = chi
    while p.degree() > 0:
        c0 = p[0]
        if c0 == 0:
            raise FactorizationFailed("root 0 in %s" % chi)
        found = None
        for r in range(1, int(abs(c0)) + 1):
            if abs(c0) % r == 0 and p(r) == 0:
                found = r
                break
        if found is None:
            raise FactorizationFailed("%s has no positive integer root" % chi)
        roots.append(found)
        p = p.exact_div(UniPoly((-found, 1)))
    return sorted(roots)


# W-action on subsets of simple roots

@lru_cache(maxsize=None)
def _elements(wt):
    return elements(wt)


@lru_cache(maxsize=None)
def _subset_data(wt):
    """(class representatives, map J -> representative, stabiliser sizes)."""
    wt = _wt(wt)
    R = RootSystem(wt)
    n = wt.rank
    simple = {r: i + 1 for i, r in enumerate(R.simple)}
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]
    rep_of = {}
    stab = {}
    els = _elements(wt)
    for J in subsets:
        if J in rep_of:
            continue
        images = set()
        cnt = 0
        roots = [R.simple_root(j) for j in J]
        for w in els:
            img = [act(w, r) for r in roots]
            if all(x in simple for x in img):
                K = frozenset(simple[x] for x in img)
                images.add(K)
                if K == J:
                    cnt += 1
        for K in images:
            rep_of[K] = J
        stab[J] = cnt
    reps = sorted(set(rep_of.values()), key=lambda J: (len(J), sorted(J)))
    return reps, rep_of, stab


def j_classes(wt):
    """Representatives of subsets of simple roots up to W-conjugacy."""
    return list(_subset_data(_wt(wt))[0])


def canonical_j(wt, J):
    return _subset_data(_wt(wt))[1][frozenset(J)]


def conjugate_j(wt, J1, J2):
    return canonical_j(wt, J1) == canonical_j(wt, J2)


def wJ_order(wt, J=()):
    """|N_W(W_J) / W_J|, i.e. the number of w with w(J) = J."""
    wt = _wt(wt)
    rep = canonical_j(wt, J)
    return _subset_data(wt)[2][rep]


def f_J(wt, J=()):
    """f_J = chi_J / |W^J| as a polynomial in t with rational coefficients."""
    chi = characteristic_polynomial(build_arrangement(wt, J))
    return chi.scale(Fraction(1, wJ_order(wt, J)))


def _wj_size(wt, J):
    from .weyl import generate, simple_reflections
    gens = simple_reflections(wt)
    f, n = wt
    return len(generate([gens[j - 1] for j in sorted(J)], n + 1 if f == "A" else n))


def decomposition(wt, t):
    """[(J, f_J(t))] over conjugacy representatives."""
    wt = _wt(wt)
    return [(J, f_J(wt, J)(t)) for J in j_classes(wt)]


def verify_decomp(wt, t):
    from .report import Report
    from .cherednik import very_good
    wt = _wt(wt)
    W = weyl(wt)
    rep = Report("S_t decomposition %s t=%d" % (wt, t))
    if not very_good(wt, t):
        rep.fail("t=%d is not very good for %s" % (t, wt))
        return rep
    tot = [Fraction(0)] * len(W.classes)
    dim = Fraction(0)
    for J, fj in decomposition(wt, t):
        rep.checked += 1
        if fj < 0 or fj.denominator != 1:
            rep.fail("f_J(%d) = %s is not a natural number for J=%s" % (t, fj, sorted(J)))
        ind = W.induce_trivial(J)
        tot = [a + fj * b for a, b in zip(tot, ind.values)]
        dim += fj * Fraction(W.order, _wj_size(wt, J))
    want = [t ** W.fixed_dim(i) for i in range(len(W.classes))]
    rep.checked += 2
    if tot != want:
        rep.fail("sum f_J Ind_{W_J} 1 differs from t^{d(w)}")
    if dim != t ** wt.rank:
        rep.fail("dimension %s != t^n = %d" % (dim, t ** wt.rank))
    return rep


# regular elements of Levi subalgebras

def ungraded_springer(T, o):
    """sum_phi dim(phi) Q_{e,phi} at q = 1, as {char: int}."""
    out = {}
    for d in T.data_for(o):
        for x, p in zip(T.weyl.chars, T.P[d]):
            v = p(1)
            if v:
                out[x] = out.get(x, 0) + v
    return out


def regular_in_levi(T, o):
    """Conjugacy representative J with H*(B_e) = Ind_{W_J} 1, or None."""
    W = T.weyl
    got = ungraded_springer(T, o)
    hits = []
    for J in j_classes(W.type):
        ind = {x: m for x, m in W.decompose(W.induce_trivial(J)).items() if m}
        if ind == got:
            hits.append(J)
    if len(hits) > 1:
        raise AmbiguousLevi("%s matches %s" % (o, [sorted(J) for J in hits]))
    return hits[0] if hits else None


def check_levi_exponents(T):
    """os_exponents(J) = m-multiset for every orbit regular in a Levi."""
    from .identities import exterior_profile
    from .report import Report
    W = T.weyl
    rep = Report("Levi exponents %s" % str(W.type))
    for o in T.order:
        J = regular_in_levi(T, o)
        if J is None:
            continue
        rep.checked += 1
        ex = os_exponents(W.type, J)
        ms = sorted(exterior_profile(T, o).exponents)
        if ex != ms:
            rep.fail("%s: exponents of J=%s are %s, m_j are %s" % (o, sorted(J), ex, ms))
        if len(ex) != W.rank - len(J):
            rep.fail("%s: s != n - |J|" % (o,))
    return rep


def check_factorization(wt):
    from .report import Report
    wt = _wt(wt)
    rep = Report("arrangement factorisation %s" % str(wt))
    for J in j_classes(wt):
        rep.checked += 1
        try:
            ex = os_exponents(wt, J)
        except FactorizationFailed as e:
            rep.fail("J=%s: %s" % (sorted(J), e))
            continue
        if len(J) < wt.rank and 1 not in ex:
            rep.fail("J=%s: chi_J(1) != 0" % sorted(J))
    return rep
