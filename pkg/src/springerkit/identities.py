"""
Exterior powers of the reflection representation inside Springer fibers.

For an orbit e and phi in A(e)^ put

    g_{e,phi} = sum_j <Q_{e,phi}, wedge^{n-j} V> y^j .

The coefficient of y^{n-1} records where V sits: summed over phi it is
sum_j q^{m_j} pi_j.  The main identity to check is

    sum_{phi,i} <Q_{e,phi}, wedge^i V> y^i phi
        = (1 + y q^{m_s} pi_s) prod_{j<s} (1 + y q^{m_j})

in R(A(e))[y] (pi_s is one-dimensional for classical groups).
"""

from collections import namedtuple
from fractions import Fraction

from . import partitions as P
from .green import green_table, group_order_poly
from .poly import BiPoly, RatFunc, UniPoly, divide_exact, NotDivisible, Q
from .report import Report
from .springer import ComponentGroup, springer_correspondence, orbits
from .weyl import CharLabel, d_canonical, fmt_char, parse_char, weyl


def _bc_factor(alpha, beta, sa, sb):
    """prod over boxes of (1 + y q^{2c+sa}) for alpha, (1 + y q^{2c+sb}) for beta.

    Returns (numerator, k) with the product equal to numerator / q^k.
    """
    num = BiPoly({(0, 0): 1})
    k = 0
    for lam, s in ((alpha, sa), (beta, sb)):
        for _, c in P.hooks_and_contents(lam):
            e = 2 * c + s
            if e >= 0:
                num = num * BiPoly({(0, 0): 1, (e, 1): 1})
            else:
                num = num * BiPoly({(-e, 0): 1, (0, 1): 1})
                k -= e
    return num, k


def _hook_den(*lams, power=1):
    den = UniPoly.const(1)
    for lam in lams:
        for h, _ in P.hooks_and_contents(lam):
            den = den * (1 - UniPoly.monomial(2 * h)) ** power
    return den


def _term(qpow, alpha, beta, sa, sb, den):
    num, k = _bc_factor(alpha, beta, sa, sb)
    shift = qpow - k
    if shift >= 0:
        return RatFunc(num.shift(shift, 0), den)
    return RatFunc(num, den * UniPoly.monomial(-shift))


def tau_closed(wt, chi):
    """tau~(chi) from the hook/content product formulas."""
    W = weyl(wt)
    if isinstance(chi, str):
        chi = parse_char(chi, W.family)
    a, b = chi.alpha, chi.beta
    if W.family in "BC":
        qp = 2 * P.n_stat(a) + 2 * P.n_stat(b) + sum(b)
        return _term(qp, a, b, 1, -1, _hook_den(a, b))
    if W.family == "D":
        if chi.tag:
            qp = 4 * P.n_stat(a) + sum(a)
            return _term(qp, a, a, 1, -1, _hook_den(a, power=2))
        base = 2 * P.n_stat(a) + 2 * P.n_stat(b)
        # restriction from B_n: chi^{a,b} and chi^{b,a} both restrict to this
        # character, so the two B terms add with no factor 1/2
        den = _hook_den(a, b)
        return _term(base + sum(b), a, b, 1, -1, den) + _term(base + sum(a), a, b, -1, 1, den)
    raise ValueError("closed formula is for types B, C, D")


# exterior powers

_wedge_cache = {}


def wedge_decomposition(W, i):
    """Irreducible multiplicities of wedge^i V, via the Newton recurrence."""
    key = (W.type, i)
    if key not in _wedge_cache:
        L = W.lambda_power(W.reflection(), i)
        _wedge_cache[key] = {x: m for x, m in W.decompose(L).items() if m}
    return _wedge_cache[key]


def wedge_label(W, i):
    """Label of wedge^i V: ([n-i], [1^i]) in B/C/D, [n+1-i, 1^i] in A."""
    n = W.rank
    if W.family == "A":
        return CharLabel(P.normalize([n + 1 - i] + [1] * i), None, None)
    a, b = (n - i,) if n - i else (), tuple([1] * i)
    if W.family == "D":
        a, b = d_canonical(a, b)
    return CharLabel(a, b, None)


def pair_with_wedge(T, d, i):
    W = T.weyl
    tot = UniPoly()
    for x, m in wedge_decomposition(W, i).items():
        v = T.entry(d, x)
        if v:
            tot = tot + v.scale(m)
    return tot


ExteriorProfile = namedtuple("ExteriorProfile", "orbit g exponents pis")


def exterior_profile(T, o):
    W = T.weyl
    n = W.rank
    G = ComponentGroup(o)
    g = {}
    vpart = {}
    for d in T.data_for(o):
        g[d.phi] = BiPoly.from_y_coeffs([pair_with_wedge(T, d, n - j) for j in range(n + 1)])
        vpart[d.phi] = pair_with_wedge(T, d, 1)
    triv = G.trivial_char()
    pairs = []
    for phi, p in vpart.items():
        for m, c in enumerate(p.coeffs):
            if c.denominator != 1 or c < 0:
                raise ValueError("V-multiplicity is not a natural number")
            pairs.extend([(m, phi)] * int(c))
    pairs.sort(key=lambda mp: (mp[0], mp[1] != triv))
    return ExteriorProfile(o, g, [m for m, _ in pairs], [phi for _, phi in pairs])


def _split_pi(prof, G):
    """(trivial exponents m_1..m_{s-1}, m_s, pi_s); pi_s last if nontrivial."""
    triv = G.trivial_char()
    nontriv = [(m, p) for m, p in zip(prof.exponents, prof.pis) if p != triv]
    if len(nontriv) > 1:
        raise ValueError("more than one nontrivial pi_j for %s" % prof.orbit)
    if nontriv:
        ms, pis = nontriv[0]
        rest = [m for m, p in zip(prof.exponents, prof.pis) if p == triv]
        return rest, ms, pis
    if not prof.exponents:
        return [], None, None
    return prof.exponents[:-1], prof.exponents[-1], triv


def theorem_rhs(prof, G):
    """Right side of the main identity as {phi: BiPoly}."""
    rest, ms, pis = _split_pi(prof, G)
    base = BiPoly({(0, 0): 1})
    for m in rest:
        base = base * BiPoly({(0, 0): 1, (m, 1): 1})
    out = {G.trivial_char(): base}
    if ms is not None:
        term = base * BiPoly({(ms, 1): 1})
        out[pis] = out.get(pis, BiPoly()) + term
    return out


def theorem_lhs(T, o):
    W = T.weyl
    out = {}
    for d in T.data_for(o):
        out[d.phi] = BiPoly.from_y_coeffs([pair_with_wedge(T, d, i) for i in range(W.rank + 1)])
    return out


def verify_main_theorem(T, o):
    rep = Report("main theorem %s" % (o,))
    G = ComponentGroup(o)
    prof = exterior_profile(T, o)
    try:
        rhs = theorem_rhs(prof, G)
    except ValueError as e:
        rep.fail(str(e))
        return rep
    lhs = theorem_lhs(T, o)
    # compare as class functions on A(e)
    for a in G.elements():
        l = sum((p.scale(G.value(phi, a)) for phi, p in lhs.items()), BiPoly())
        r = sum((p.scale(G.value(phi, a)) for phi, p in rhs.items()), BiPoly())
        rep.checked += 1
        if l != r:
            rep.fail("mismatch at a=%s: %s vs %s" % (a, l, r))
    for phi in set(lhs) | set(rhs):
        rep.checked += 1
        if lhs.get(phi, BiPoly()) != rhs.get(phi, BiPoly()):
            rep.fail("coefficient of phi=%s differs" % (G.phi_vector(phi),))
    if lhs.get(G.trivial_char(), BiPoly()).y_coeff(0) != UniPoly.const(1):
        rep.fail("y^0 coefficient is not the trivial character")
    return rep


def bc_s(o):
    k = o.k
    return (k - 1) // 2 if o.family == "B" else k // 2


def bc_product_check(T, o):
    rep = Report("B/C product %s" % (o,))
    if o.family not in "BC":
        rep.fail("type %s has no product formula" % o.family)
        return rep
    n = o.rank
    s = bc_s(o)
    want = BiPoly({(0, n - s): 1})
    for i in range(1, s + 1):
        want = want * BiPoly({(2 * i - 1, 0): 1, (0, 1): 1})
    prof = exterior_profile(T, o)
    G = ComponentGroup(o)
    for phi, g in prof.g.items():
        rep.checked += 1
        if phi == G.trivial_char():
            if g != want:
                rep.fail("g_{e,1} = %s, expected %s" % (g, want))
        elif g:
            rep.fail("g_{e,phi} nonzero for phi=%s" % (G.phi_vector(phi),))
    return rep


def spaltenstein_mj(lam):
    lam = P.normalize(lam)
    k = len(lam)
    r = sum(1 for p in lam if p != 1)
    if r % 2:
        s = k // 2 - 1
        return [2 * j - 1 for j in range(1, s + 1)]
    s = k // 2
    return sorted([2 * j - 1 for j in range(1, s)] + [(k + r - 2) // 2])


def pij_predict(o):
    """(nontrivial?, predicted pi_s) for a type D orbit."""
    lam = o.lam
    k, r = len(lam), sum(1 for p in lam if p != 1)
    G = ComponentGroup(o)
    odd_big = any(p % 2 and p != 1 for p in lam)
    if r % 2 == 0 and k != r and odd_big:
        eps = tuple(-1 if v == 1 else 1 for v in G.parts)
        return True, G.normalize_char(eps)
    return False, G.trivial_char()


def check_d_exponents(T, o):
    rep = Report("type D exponents %s" % (o,))
    prof = exterior_profile(T, o)
    rep.checked += 1
    if sorted(prof.exponents) != spaltenstein_mj(o.lam):
        rep.fail("exponents %s, predicted %s" % (prof.exponents, spaltenstein_mj(o.lam)))
    G = ComponentGroup(o)
    nontriv, want = pij_predict(o)
    _, _, pis = _split_pi(prof, G)
    got_nontriv = pis is not None and pis != G.trivial_char()
    rep.checked += 1
    if got_nontriv != nontriv:
        rep.fail("pi_s nontrivial=%s, predicted %s" % (got_nontriv, nontriv))
    elif nontriv and pis != want:
        rep.fail("pi_s = %s, predicted %s" % (G.phi_vector(pis), G.phi_vector(want)))
    return rep


def divisor_range(o):
    k = o.k
    top = {"B": k - 2, "D": k - 3, "C": k - 1}[o.family]
    return list(range(1, top + 1, 2))


def divisibility_check(datum):
    o = datum.orbit
    rep = Report("divisibility %s %s" % (str(o), fmt_char(datum.char)))
    tau = weyl(o.weyl_type).molien_tau(datum.char)
    num = tau.num
    for c in divisor_range(o):
        rep.checked += 1
        try:
            divide_exact(num, BiPoly({(c, 0): 1, (0, 1): 1}))
        except NotDivisible:
            rep.fail("not divisible by 1 + q^-%d y" % c)
    return rep


def vanishing_check(T, o):
    rep = Report("vanishing %s" % (o,))
    k = o.k
    for d in T.data_for(o):
        for j in range(T.weyl.rank + 1):
            beyond = 2 * j > k - 1 if o.family == "B" else 2 * j > k
            if beyond:
                rep.checked += 1
                if pair_with_wedge(T, d, j):
                    rep.fail("wedge^%d V occurs for phi=%s" % (j, d.phi))
    return rep


def h_values(T, o):
    """h_{e,phi} = sum_phi' s_{phi,phi'} g_{e,phi'}."""
    phis, Sk = T.S[o]
    prof = exterior_profile(T, o)
    out = {}
    for i, a in enumerate(phis):
        acc = BiPoly()
        for j, b in enumerate(phis):
            if Sk[i][j]:
                acc = acc + BiPoly.coerce(Sk[i][j]) * prof.g[b]
        out[a] = acc
    return out


def verify_global_equation(T):
    W = T.weyl
    rep = Report("global equation %s" % str(W.type))
    gf = group_order_poly(W).scale((-1) ** W.rank)
    hs = {o: h_values(T, o) for o in T.order}
    for x in W.chars:
        lhs = W.molien_tau(x) * RatFunc(gf)
        rhs = BiPoly()
        for d in T.data:
            v = T.entry(d, x)
            if v:
                rhs = rhs + hs[d.orbit][d.phi] * BiPoly.coerce(v)
        rep.checked += 1
        if lhs != RatFunc(rhs):
            rep.fail("mismatch for %s" % fmt_char(x))
    return rep


def run_all(wt):
    """Every identity check for one Weyl type."""
    T = green_table(wt)
    W = T.weyl
    rep = Report("identities %s" % str(W.type))
    for o in T.order:
        rep.merge(verify_main_theorem(T, o))
        if W.family in "BCD":
            rep.merge(vanishing_check(T, o))
        if W.family in "BC":
            rep.merge(bc_product_check(T, o))
        if W.family == "D":
            rep.merge(check_d_exponents(T, o))
    if W.family in "BCD":
        for d in springer_correspondence(W.type):
            rep.merge(divisibility_check(d))
        for x in W.chars:
            rep.checked += 1
            if tau_closed(W.type, x) != W.molien_tau(x):
                rep.fail("closed tau differs from Molien for %s" % fmt_char(x))
    rep.merge(verify_global_equation(T))
    return rep
