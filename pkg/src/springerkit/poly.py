"""
Exact polynomials over the rationals.

UniPoly is a polynomial in q, BiPoly a polynomial in (q, y), and RatFunc
a quotient whose denominator lives in Q[q].  Nothing is ever rounded.
"""

from fractions import Fraction
from functools import reduce


class NotDivisible(ArithmeticError):
    pass


class DegreeExceeded(ValueError):
    pass


def _frac(c):
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class UniPoly:
    """Polynomial in q; coeffs[i] is the coefficient of q^i."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @classmethod
    def coerce(cls, x):
        if isinstance(x, UniPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((x,))
        return NotImplemented

    def degree(self):
        return len(self.coeffs) - 1

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def lead(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __add__(self, other):
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            return NotImplemented
        other = UniPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = UniPoly.const(1)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def shift(self, k):
        """Multiply by q^k (k may be negative if the low terms vanish)."""
        if k >= 0:
            return UniPoly([0] * k + list(self.coeffs))
        if any(self.coeffs[:-k]):
            raise NotDivisible("q^%d does not divide" % -k)
        return UniPoly(self.coeffs[-k:])

    def divmod(self, other):
        other = UniPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree()
        lb = other.lead()
        if len(r) - 1 < db:
            return UniPoly(), self
        qt = [Fraction(0)] * (len(r) - db)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] / lb
            qt[k] = c
            if c:
                for j, bc in enumerate(other.coeffs):
                    r[k + j] -= c * bc
        return UniPoly(qt), UniPoly(r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        qt, r = self.divmod(other)
        if r:
            raise NotDivisible("%s does not divide %s" % (other, self))
        return qt

    def monic(self):
        if not self:
            return self
        lc = self.lead()
        return UniPoly([c / lc for c in self.coeffs])

    def scale(self, c):
        c = _frac(c)
        return UniPoly([c * x for x in self.coeffs])

    def __call__(self, x):
        return evaluate(self, x)

    def subs_power(self, t):
        """p(q^t)."""
        out = [Fraction(0)] * (t * len(self.coeffs))
        for i, c in enumerate(self.coeffs):
            out[i * t] = c
        return UniPoly(out)

    def reverse(self, n=None):
        """q^n p(1/q); n defaults to the degree."""
        if n is None:
            n = self.degree()
        if self.degree() > n:
            raise DegreeExceeded("degree %d exceeds %d" % (self.degree(), n))
        padded = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return UniPoly(padded[::-1])

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def int_coeffs(self):
        return [int(c) if c.denominator == 1 else c for c in self.coeffs]

    def __repr__(self):
        return "UniPoly(%s)" % (self.int_coeffs(),)

    def __str__(self):
        return format_poly({(i, 0): c for i, c in enumerate(self.coeffs) if c})

    def to_json(self):
        return {"var": "q", "coeffs": [[c.numerator, c.denominator] for c in self.coeffs]}

    @classmethod
    def from_json(cls, d):
        return cls([Fraction(a, b) for a, b in d["coeffs"]])


def gcd(a, b):
    """Monic gcd over Q."""
    a, b = UniPoly.coerce(a), UniPoly.coerce(b)
    while b:
        a, b = b, a % b
    return a.monic()


def lcm(a, b):
    if not a or not b:
        return UniPoly()
    return (a * b // gcd(a, b)).monic()


def q_int(k):
    """1 + q + ... + q^(k-1)."""
    return UniPoly([1] * k)


Q = UniPoly.monomial(1)
ONE = UniPoly.const(1)


class BiPoly:
    """Polynomial in (q, y) stored as {(qpow, ypow): coefficient}."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        for k, c in (terms or {}).items():
            c = _frac(c)
            if c:
                t[k] = c
        self.terms = t
        self._hash = None

    @classmethod
    def coerce(cls, x):
        if isinstance(x, BiPoly):
            return x
        if isinstance(x, UniPoly):
            return cls({(i, 0): c for i, c in enumerate(x.coeffs)})
        if isinstance(x, (int, Fraction)):
            return cls({(0, 0): x})
        return NotImplemented

    @classmethod
    def from_y_coeffs(cls, polys):
        """sum_j polys[j](q) y^j."""
        t = {}
        for j, p in enumerate(polys):
            p = UniPoly.coerce(p)
            for i, c in enumerate(p.coeffs):
                if c:
                    t[(i, j)] = c
        return cls(t)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def deg_y(self):
        return max((b for _, b in self.terms), default=-1)

    def deg_q(self):
        return max((a for a, _ in self.terms), default=-1)

    def y_coeff(self, j):
        d = self.deg_q()
        return UniPoly([self.terms.get((i, j), 0) for i in range(d + 1)])

    def y_coeffs(self):
        return [self.y_coeff(j) for j in range(self.deg_y() + 1)]

    def __eq__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return BiPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = BiPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a + a2, b + b2)
                t[k] = t.get(k, 0) + c * c2
        return BiPoly(t)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = BiPoly({(0, 0): 1})
        for _ in range(k):
            r = r * self
        return r

    def scale(self, c):
        c = _frac(c)
        return BiPoly({k: c * v for k, v in self.terms.items()})

    def __call__(self, q, y):
        return evaluate(self, (q, y))

    def subs_y(self, y):
        """Substitute a UniPoly (or constant) for y."""
        out = UniPoly()
        for j, p in enumerate(self.y_coeffs()):
            if p:
                out = out + p * UniPoly.coerce(y) ** j
        return out

    def shift(self, qk=0, yk=0):
        return BiPoly({(a + qk, b + yk): c for (a, b), c in self.terms.items()})

    def nonnegative(self):
        return all(c >= 0 for c in self.terms.values())

    def is_integral(self):
        return all(c.denominator == 1 for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def __repr__(self):
        return "BiPoly(%s)" % str(self)

    def __str__(self):
        return format_poly(self.terms)

    def to_json(self):
        return {"vars": ["q", "y"],
                "terms": [[a, b, c.numerator, c.denominator] for (a, b), c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, d):
        return cls({(a, b): Fraction(n, m) for a, b, n, m in d["terms"]})


Y = BiPoly({(0, 1): 1})


def _lead_y(p):
    """Leading term in the (y, q) lex order."""
    return max(p.terms, key=lambda k: (k[1], k[0]))


def divide_exact(a, b):
    """Quotient c with b*c == a; raises NotDivisible otherwise."""
    a, b = BiPoly.coerce(a), BiPoly.coerce(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    # divide as polynomials in y over Q(q); every step must stay in Q[q]
    by = b.y_coeffs()
    db = len(by) - 1
    lb = by[-1]
    rem = a.y_coeffs()
    if len(rem) - 1 < db:
        if a:
            raise NotDivisible("y-degree too small")
        return BiPoly()
    quot = [UniPoly()] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        qk, r = rem[k + db].divmod(lb)
        if r:
            raise NotDivisible("%s does not divide %s" % (b, a))
        quot[k] = qk
        if qk:
            for j, bc in enumerate(by):
                rem[k + j] = rem[k + j] - qk * bc
    if any(rem[:db]):
        raise NotDivisible("%s does not divide %s" % (b, a))
    return BiPoly.from_y_coeffs(quot)


def reverse_in_y(p, n):
    """y^n p(q, 1/y)."""
    p = BiPoly.coerce(p)
    if p.deg_y() > n:
        raise DegreeExceeded("deg_y %d exceeds %d" % (p.deg_y(), n))
    return BiPoly({(a, n - b): c for (a, b), c in p.terms.items()})


def evaluate(p, point):
    """Exact value of p at a rational point (q, or (q, y) for BiPoly)."""
    if isinstance(p, RatFunc):
        d = evaluate(p.den, point[0] if isinstance(point, tuple) else point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at %r" % (point,))
        return evaluate(p.num, point) / d
    if isinstance(p, BiPoly):
        q, y = (_frac(v) for v in point)
        return sum((c * q ** a * y ** b for (a, b), c in p.terms.items()), Fraction(0))
    if isinstance(point, tuple):
        point = point[0]
    x = _frac(point)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class RatFunc:
    """num/den with num in Q[q] or Q[q,y] and den in Q[q], reduced, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        den = ONE if den is None else UniPoly.coerce(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if isinstance(num, BiPoly):
            g = reduce(gcd, [c for c in num.y_coeffs() if c], den)
            if g.degree() > 0:
                num = BiPoly.from_y_coeffs([c // g for c in num.y_coeffs()])
                den = den // g
            lc = den.lead()
            num = num.scale(1 / lc)
            if not num:
                den = ONE
        else:
            num = UniPoly.coerce(num)
            g = gcd(num, den) if num else den
            num, den = num // g, den // g
            lc = den.lead()
            num = num.scale(1 / lc)
        self.num = num
        self.den = den.monic()

    def is_poly(self):
        return self.den.degree() == 0

    def _bi(self):
        return BiPoly.coerce(self.num)

    @staticmethod
    def coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (UniPoly, BiPoly, int, Fraction)):
            return RatFunc(x if not isinstance(x, (int, Fraction)) else UniPoly.const(x))
        return NotImplemented

    def __add__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        l = lcm(self.den, other.den)
        a = _mulnum(self.num, l // self.den)
        b = _mulnum(other.num, l // other.den)
        return RatFunc(_addnum(a, b), l)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc.coerce(other))

    def __mul__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(_mulnum(self.num, other.num), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(_scale(self.num, 1 / _frac(other)), self.den)
        other = RatFunc.coerce(other)
        if isinstance(other.num, BiPoly) and other.num.deg_y() > 0:
            raise TypeError("only q-only divisors supported")
        on = other.num if isinstance(other.num, UniPoly) else other.num.y_coeff(0)
        return RatFunc(_mulnum(self.num, other.den), self.den * on)

    def __eq__(self, other):
        other = RatFunc.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return BiPoly.coerce(self.num) * other.den == BiPoly.coerce(other.num) * self.den

    def __hash__(self):
        return hash((BiPoly.coerce(self.num), self.den))

    def __repr__(self):
        return "RatFunc(%s, %s)" % (self.num, self.den)

    def __str__(self):
        if self.is_poly():
            return str(self.num)
        return "(%s)/(%s)" % (self.num, self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _mulnum(a, b):
    if isinstance(a, BiPoly) or isinstance(b, BiPoly):
        return BiPoly.coerce(a) * BiPoly.coerce(b)
    return a * b


def _addnum(a, b):
    if isinstance(a, BiPoly) or isinstance(b, BiPoly):
        return BiPoly.coerce(a) + BiPoly.coerce(b)
    return a + b


def _scale(a, c):
    return a.scale(c)


def _fmt_coeff(c, latex=False):
    if c.denominator == 1:
        return str(c.numerator)
    if latex:
        return "\\tfrac{%d}{%d}" % (c.numerator, c.denominator)
    return "(%s)" % c


def _mono(v, k, latex):
    if not k:
        return ""
    if k == 1:
        return v
    return "%s^{%d}" % (v, k) if latex else "%s^%d" % (v, k)


def format_poly(terms, vars=("q", "y"), latex=False):
    """Ascending in y, then in q: "1 + 2q^2 + q^4"."""
    if not terms:
        return "0"
    parts = []
    for (a, b), c in sorted(terms.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        m = _mono(vars[0], a, latex) + _mono(vars[1], b, latex)
        if not m:
            s = _fmt_coeff(abs(c), latex)
        elif abs(c) == 1:
            s = m
        else:
            s = _fmt_coeff(abs(c), latex) + m
        parts.append(("-" if c < 0 else "+", s))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sg, s in parts[1:]:
        out += " %s %s" % (sg, s)
    return out
