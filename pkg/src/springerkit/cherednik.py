"""
The t^n-dimensional graded representation H = sum_i (-1)^i q^{it} S (x) wedge^i V.

Its multiplicities are tau~(chi) at y = -q^t.  Writing H = sum f_{e,phi} Q_{e,phi}
gives coefficients f_{e,phi}(q; t), computed here two ways: a triangular solve
against the Green table, and the closed product formula coming from the
exterior-power identity together with the centralizer orders.
"""

from fractions import Fraction
from math import gcd

from .arrangements import f_J, regular_in_levi
from .green import centralizer_orders, green_table, group_order_poly
from .identities import exterior_profile, _split_pi
from .poly import BiPoly, NotDivisible, RatFunc, UniPoly
from .report import Report
from .springer import ComponentGroup, dim_springer_fiber
from .weyl import WeylType, fmt_char, weyl


class NonPolynomialF(ArithmeticError):
    pass


def _wt(wt):
    if isinstance(wt, str):
        return WeylType.parse(wt)
    return WeylType(*wt)


def very_good(wt, t):
    """t prime to the bad primes and to the index of connection."""
    f, n = _wt(wt)
    if t < 1:
        raise ValueError("t must be positive")
    if f == "A":
        return gcd(t, n + 1) == 1
    return t % 2 == 1


def _at_y(tau, t):
    """RatFunc in (q, y) evaluated at y = -q^t, as RatFunc in q."""
    num = tau.num
    if isinstance(num, UniPoly):
        return RatFunc(num, tau.den)
    acc = UniPoly()
    for (a, b), c in num.terms.items():
        acc = acc + UniPoly.monomial(a + t * b, c * (-1) ** b)
    return RatFunc(acc, tau.den)


class TnRepresentation:
    def __init__(self, wt, t, mult):
        self.type = wt
        self.t = t
        self.mult = mult

    def is_polynomial(self):
        return all(m.is_poly() for m in self.mult.values())

    def is_nonnegative(self):
        for m in self.mult.values():
            if not m.is_poly():
                return False
            p = m.num.scale(Fraction(1) / m.den[0])
            if not p.nonnegative():
                return False
        return True

    def poly(self, chi):
        m = self.mult[chi]
        if not m.is_poly():
            raise NonPolynomialF("multiplicity of %s is not a polynomial" % fmt_char(chi))
        return m.num.scale(Fraction(1) / m.den[0])

    def dimension(self):
        W = weyl(self.type)
        return sum(self.poly(x)(1) * W.degree_of(x) for x in W.chars)


def h_representation(wt, t):
    W = weyl(wt)
    return TnRepresentation(W.type, t, {x: _at_y(W.molien_tau(x), t) for x in W.chars})


def ungraded_trace_check(wt, t):
    """At q = 1 the character of H is w -> t^{d(w)}."""
    W = weyl(wt)
    H = h_representation(wt, t)
    vals = [Fraction(0)] * len(W.classes)
    for i, x in enumerate(W.chars):
        m = H.poly(x)(1)
        if m:
            vals = [v + m * c for v, c in zip(vals, W.table[i])]
    return vals == [t ** W.fixed_dim(i) for i in range(len(W.classes))]


def f_solve(wt, t):
    """{datum: f_{e,phi}(q;t)} by the triangular solve, smallest orbit first."""
    T = green_table(wt)
    W = T.weyl
    H = h_representation(W.type, t)
    out = {}
    for o in T.order:
        de = dim_springer_fiber(o)
        for d in T.data_for(o):
            rhs = H.poly(d.char)
            for e, fe in out.items():
                v = T.entry(e, d.char)
                if v and fe:
                    rhs = rhs - fe * v
            try:
                out[d] = rhs.shift(-de)
            except NotDivisible:
                raise NonPolynomialF("f for %s is not a polynomial" % (o,))
    return out


def _class_sum(G, Z, psi):
    """sum_c psi(c) / |Z(e_c)| as RatFunc in q."""
    acc = RatFunc(UniPoly())
    for a, z in Z.items():
        v = G.value(psi, a)
        if v:
            acc = acc + RatFunc(UniPoly.const(v), z)
    return acc


def f_closed(T, d, t):
    """f_{e,phi}(q;t) from the product formula; d is a SpringerDatum."""
    W = T.weyl
    n = W.rank
    o = d.orbit
    G = ComponentGroup(o)
    Z = centralizer_orders(T, o)
    prof = exterior_profile(T, o)
    rest, ms, pis = _split_pi(prof, G)
    if ms is None:
        # s = 0: no V in H*(B_e), the bracket reduces to sum_c phi(c)/|Z|
        val = _class_sum(G, Z, d.phi) * RatFunc(UniPoly.monomial(t * n))
    else:
        s = len(rest) + 1
        dd = 1
        st = dd + s - 1
        m = sum(rest) + dd * ms
        pre = UniPoly.monomial(t * (n - st) + m)
        for mj in rest:
            pre = pre * (UniPoly.monomial(t - mj) - 1)
        # wedge^0 pi = 1, wedge^1 pi = pi
        br = RatFunc(UniPoly())
        for i in range(dd + 1):
            lam = G.trivial_char() if dd - i == 0 else pis
            sgn = (-1) ** (dd - i)
            term = _class_sum(G, Z, G.multiply(lam, d.phi))
            br = br + term * RatFunc(UniPoly.monomial(i * (t - ms), sgn))
        val = br * RatFunc(pre)
    if not val.is_poly():
        raise NonPolynomialF("closed form for %s is not a polynomial" % (o,))
    return val.num.scale(Fraction(1) / val.den[0])


def f_from_h(T, d, t):
    """(-1)^n h_{e,phi}(y = -q^t) / |G^F|: the unsimplified sum over c."""
    from .identities import h_values
    W = T.weyl
    h = h_values(T, d.orbit)[d.phi]
    acc = UniPoly()
    for (a, b), c in h.terms.items():
        acc = acc + UniPoly.monomial(a + t * b, c * (-1) ** (b + W.rank))
    return acc.exact_div(group_order_poly(W))


def verify_f(wt, t):
    """f_solve = f_closed entrywise, all polynomial."""
    T = green_table(wt)
    rep = Report("f_solve = f_closed %s t=%d" % (str(T.weyl.type), t))
    try:
        F = f_solve(wt, t)
    except NonPolynomialF as e:
        rep.fail(str(e))
        return rep
    for d, f in F.items():
        rep.checked += 1
        try:
            g = f_closed(T, d, t)
        except NonPolynomialF as e:
            rep.fail(str(e))
            continue
        if f != g:
            rep.fail("%s phi=%s: solve %s, closed %s" % (d.orbit, d.phi, f, g))
    return rep


def verify_q1(wt, t):
    """f(1;t) = f_J(t) when e is regular in l_J, else 0."""
    T = green_table(wt)
    W = T.weyl
    rep = Report("f(1;t) %s t=%d" % (str(W.type), t))
    F = f_solve(wt, t)
    for o in T.order:
        J = regular_in_levi(T, o)
        want = f_J(W.type, J)(t) if J is not None else 0
        for d in T.data_for(o):
            rep.checked += 1
            got = F[d](1)
            if got != want:
                rep.fail("%s phi=%s: f(1;%d) = %s, expected %s" % (d.orbit, d.phi, t, got, want))
    return rep


def falsification(wt, t):
    """True if some multiplicity of H is non-polynomial or has a negative coefficient."""
    return not h_representation(wt, t).is_nonnegative()
