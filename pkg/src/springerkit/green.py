"""
Green functions by the Lusztig-Shoji algorithm.

With chi running over irreducible characters, set

    Omega[chi, chi'] = q^N <Q_0, chi chi' eps>

(Q_0 is the coinvariant algebra).  The orthogonality relation says that
Omega = P^t S P, where row (e, phi) of P lists <Q_{e,phi}, chi> and S is
block diagonal with one block (s_{phi,phi'}) per orbit.  P is block upper
triangular for the closure order with q^{d(e)} on the diagonal, so both
factors can be peeled off one orbit at a time, smallest orbit first.
"""

from fractions import Fraction

from .poly import UniPoly, RatFunc, NotDivisible
from .springer import (ComponentGroup, closure_leq, dim_springer_fiber, orbit_dim,
                       springer_correspondence)
from .weyl import GradedCharacter, weyl, fmt_char


class DecompositionFailed(ArithmeticError):
    pass


class NonPolynomialCount(ArithmeticError):
    pass


def omega(W):
    """Omega as a list of lists of UniPoly indexed like W.chars."""
    W = weyl(W) if not hasattr(W, "chars") else W
    n = len(W.chars)
    eps = W.sign().values
    cp = W._coinv_polys
    qN = UniPoly.monomial(W.N, Fraction(1, W.order))
    om = [[None] * n for _ in range(n)]
    for i in range(n):
        ri = W.table[i]
        for j in range(i, n):
            rj = W.table[j]
            acc = UniPoly()
            for c in range(len(W.classes)):
                v = ri[c] * rj[c] * eps[c] * W.sizes[c]
                if v:
                    acc = acc + cp[c].scale(v)
            om[i][j] = om[j][i] = acc * qN
    return om


def group_order_poly(W):
    """|G^F| = q^N prod (q^d - 1)."""
    p = UniPoly.monomial(W.N)
    for d in W.degrees:
        p = p * (UniPoly.monomial(d) - 1)
    return p


# small exact linear algebra over Q(q)

def _mat_solve(A, B):
    """Solve A X = B over Q(q); A square of UniPoly, B list of rows."""
    n = len(A)
    M = [[RatFunc(x) for x in A[i]] + [RatFunc(x) for x in B[i]] for i in range(n)]
    w = len(M[0])
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col].num), None)
        if piv is None:
            raise DecompositionFailed("singular block")
        M[col], M[piv] = M[piv], M[col]
        inv = RatFunc(M[col][col].den, M[col][col].num)
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col].num:
                f = M[r][col]
                M[r] = [a - f * b for a, b in zip(M[r], M[col])]
    return [row[n:] for row in M]


def det(A):
    """Determinant of a small matrix of UniPoly (Laplace expansion)."""
    n = len(A)
    if n == 0:
        return UniPoly.const(1)
    if n == 1:
        return A[0][0]
    tot = UniPoly()
    for j in range(n):
        if not A[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        t = A[0][j] * det(minor)
        tot = tot + (t if j % 2 == 0 else -t)
    return tot


def _as_poly(r):
    if not r.is_poly():
        raise DecompositionFailed("non-polynomial entry %s" % r)
    return r.num.scale(Fraction(1) / r.den[0])


class GreenTable:
    """Output of the Lusztig-Shoji decomposition."""

    def __init__(self, W, data, order, P, S):
        self.weyl = W
        self.data = data          # SpringerData in solving order
        self.order = order        # orbits in solving order
        self.P = P                # datum -> list of UniPoly over W.chars
        self.S = S                # orbit -> (list of phi, matrix)
        self.row = {d: i for i, d in enumerate(data)}

    def data_for(self, o):
        return [d for d in self.data if d.orbit == o]

    def q_phi(self, o, phi):
        """Q_{e,phi} as a GradedCharacter (zero if phi does not occur)."""
        for d in self.data_for(o):
            if d.phi == tuple(phi):
                return GradedCharacter(self.weyl, dict(zip(self.weyl.chars, self.P[d])))
        return GradedCharacter(self.weyl, {})

    def q_e(self, o):
        """Q_e = sum_phi dim(phi) Q_{e,phi}, as a GradedCharacter."""
        tot = GradedCharacter(self.weyl, {})
        for d in self.data_for(o):
            tot = tot + GradedCharacter(self.weyl, dict(zip(self.weyl.chars, self.P[d])))
        return tot

    def entry(self, d, chi):
        return self.P[d][self.weyl.char_index[chi]]

    def s_block(self, o):
        return self.S[o]

    def to_rows(self):
        out = []
        W = self.weyl
        for d in self.data:
            G = ComponentGroup(d.orbit)
            out.append({"orbit": str(d.orbit), "phi": G.phi_vector(d.phi), "char": fmt_char(d.char),
                        "entries": {fmt_char(x): p for x, p in zip(W.chars, self.P[d]) if p}})
        return out


def solving_order(W, tiebreak=0):
    """Orbits sorted by dimension, ties by partition (reversed if tiebreak)."""
    obs = {d.orbit for d in springer_correspondence(W.type)}
    key = lambda o: (o.lam, o.tag or "")
    ob = sorted(obs, key=key, reverse=bool(tiebreak))
    return sorted(ob, key=orbit_dim)


def lusztig_shoji(W, tiebreak=0):
    W = weyl(W) if not hasattr(W, "chars") else W
    om = omega(W)
    corr = springer_correspondence(W.type)
    order = solving_order(W, tiebreak)
    blocks = []
    for o in order:
        ds = [d for d in corr if d.orbit == o]
        blocks.append((o, ds, [W.char_index[d.char] for d in ds], dim_springer_fiber(o)))
    ncol = len(W.chars)
    P, S = {}, {}
    # rows[k][l]: matrix block P_{k,l}, rows indexed by ds of k, cols by chars of l
    done = []
    for k, (o, ds, cols, dk) in enumerate(blocks):
        # S_k = q^{-2d}(Omega_kk - sum_i P_ik^t S_i P_ik)
        def corrected(rows_a, rows_b):
            out = [[om[a][b] for b in rows_b] for a in rows_a]
            for (oi, dsi, colsi, di), Si in done:
                Pa = [[P[d][a] for a in rows_a] for d in dsi]
                Pb = [[P[d][b] for b in rows_b] for d in dsi]
                if not any(any(r) for r in Pa) or not any(any(r) for r in Pb):
                    continue
                m = len(dsi)
                for x in range(len(rows_a)):
                    for y in range(len(rows_b)):
                        acc = UniPoly()
                        for u in range(m):
                            if not Pa[u][x]:
                                continue
                            for v in range(m):
                                if Si[u][v] and Pb[v][y]:
                                    acc = acc + Pa[u][x] * Si[u][v] * Pb[v][y]
                        if acc:
                            out[x][y] = out[x][y] - acc
            return out

        try:
            Sk = [[e.shift(-2 * dk) for e in row] for row in corrected(cols, cols)]
        except NotDivisible:
            raise DecompositionFailed("diagonal block of %s not divisible by q^%d" % (o, 2 * dk))
        rest = list(range(ncol))
        X = corrected(cols, rest)
        sol = _mat_solve(Sk, X)
        for i, d in enumerate(ds):
            row = []
            for c in rest:
                v = _as_poly(sol[i][c])
                try:
                    row.append(v.shift(-dk))
                except NotDivisible:
                    raise DecompositionFailed("row %s not divisible by q^%d" % (d, dk))
            P[d] = row
        S[o] = ([d.phi for d in ds], Sk)
        done.append(((o, ds, cols, dk), Sk))
    data = [d for _, ds, _, _ in blocks for d in ds]
    return GreenTable(W, data, order, P, S)


_tables = {}


def green_table(wt):
    W = weyl(wt)
    if W.type not in _tables:
        _tables[W.type] = lusztig_shoji(W)
    return _tables[W.type]


def check_structure(T):
    """List of failures of triangularity, diagonal, positivity, Q_0."""
    W = T.weyl
    bad = []
    for d in T.data:
        de = dim_springer_fiber(d.orbit)
        for x, p in zip(W.chars, T.P[d]):
            if not p:
                continue
            owner = next(e.orbit for e in T.data if e.char == x)
            if not closure_leq(d.orbit, owner):
                bad.append("nonzero entry outside closure: %s, %s" % (d.orbit, fmt_char(x)))
            if not (p.is_integral() and p.nonnegative()):
                bad.append("negative or fractional coefficient: %s, %s" % (d.orbit, fmt_char(x)))
        diag = T.entry(d, d.char)
        if diag != UniPoly.monomial(de):
            bad.append("diagonal of %s is %s, expected q^%d" % (d.orbit, diag, de))
        for e in T.data_for(d.orbit):
            if e != d and T.entry(d, e.char):
                bad.append("off-diagonal entry inside block of %s" % d.orbit)
    zero = T.order[0]
    q0 = T.q_e(zero)
    for x in W.chars:
        if q0[x] != W.fake_degree(x):
            bad.append("Q_0 differs from fake degree at %s" % fmt_char(x))
    return bad


def verify_orthogonality(T):
    """Rebuild P^t S P and compare with Omega; also check det S != 0."""
    W = T.weyl
    om = omega(W)
    n = len(W.chars)
    bad = []
    recon = [[UniPoly() for _ in range(n)] for _ in range(n)]
    for o in T.order:
        phis, Sk = T.S[o]
        ds = T.data_for(o)
        if not det(Sk):
            bad.append("singular s-matrix for %s" % o)
        for i in range(n):
            for j in range(i, n):
                acc = UniPoly()
                for u, du in enumerate(ds):
                    a = T.P[du][i]
                    if not a:
                        continue
                    for v, dv in enumerate(ds):
                        b = T.P[dv][j]
                        if b and Sk[u][v]:
                            acc = acc + a * Sk[u][v] * b
                recon[i][j] = recon[i][j] + acc
    for i in range(n):
        for j in range(i, n):
            if recon[i][j] != om[i][j]:
                bad.append("Eq mismatch at (%s, %s)" % (fmt_char(W.chars[i]), fmt_char(W.chars[j])))
    return bad


def s_function(T, o):
    """psi -> sum_c |O_{e_c}| psi(c), known on products of occurring characters."""
    G = ComponentGroup(o)
    phis, Sk = T.S[o]
    F = {}
    for i, a in enumerate(phis):
        for j, b in enumerate(phis):
            psi = G.multiply(a, b)
            if psi in F and F[psi] != Sk[i][j]:
                raise DecompositionFailed("s-values of %s are not a function of the product" % o)
            F[psi] = Sk[i][j]
    return F


def centralizer_orders(T, o):
    """Map A(e) element -> |Z_{G^F}(e_a)| (UniPoly)."""
    G = ComponentGroup(o)
    F = s_function(T, o)
    chars = G.characters()
    missing = [psi for psi in chars if psi not in F]
    if missing:
        raise NonPolynomialCount("s-values do not determine all classes of A(e) for %s" % o)
    gf = group_order_poly(T.weyl)
    A = G.elements()
    out = {}
    for a in A:
        tot = UniPoly()
        for psi in chars:
            tot = tot + F[psi].scale(G.value(psi, a))
        cnt = tot.scale(Fraction(1, len(A)))
        if not cnt:
            raise NonPolynomialCount("empty rational orbit for %s" % o)
        try:
            z = gf.exact_div(cnt)
        except NotDivisible:
            raise NonPolynomialCount("|O| does not divide |G^F| for %s" % o)
        if not z.is_integral():
            raise NonPolynomialCount("non-integral centralizer order for %s" % o)
        out[a] = z
    return out


def orbit_counts(T, o):
    """Map A(e) element -> |O_{e_a}| over F_q."""
    gf = group_order_poly(T.weyl)
    return {a: gf.exact_div(z) for a, z in centralizer_orders(T, o).items()}


def same_table(T1, T2):
    if set(T1.data) != set(T2.data):
        return False
    return all(T1.P[d] == T2.P[d] for d in T1.data)
