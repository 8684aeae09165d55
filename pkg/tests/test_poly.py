from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from springerkit.poly import (BiPoly, DegreeExceeded, NotDivisible, RatFunc, UniPoly, divide_exact,
                              evaluate, reverse_in_y)

coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)
unis = st.lists(coef, max_size=5).map(UniPoly)
bis = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 3)), coef, max_size=6).map(BiPoly)


def q(k=1):
    return UniPoly.monomial(k)


def test_exact_division_examples():
    assert (q(2) - 1).exact_div(q() - 1) == q() + 1
    y = BiPoly({(0, 1): 1})
    qy = BiPoly({(1, 0): 1, (0, 1): 1})
    assert divide_exact(y * qy, qy) == y
    a = BiPoly({(0, 0): 1, (1, 1): 1})
    b = BiPoly({(0, 0): 1, (3, 1): 1})
    assert divide_exact(a * b, a) == b


def test_division_failure():
    with pytest.raises(NotDivisible):
        (q(2) + 1).exact_div(q() - 1)
    with pytest.raises(NotDivisible):
        divide_exact(BiPoly({(0, 1): 1}), BiPoly({(1, 0): 1, (0, 1): 1}))


def test_reverse_in_y():
    p = BiPoly({(0, 0): 1, (1, 1): 1})
    assert reverse_in_y(p, 1) == BiPoly({(0, 1): 1, (1, 0): 1})
    assert reverse_in_y(BiPoly({(0, 0): 1}), 2) == BiPoly({(0, 2): 1})
    p3 = BiPoly({(0, 0): 1, (3, 1): 1})
    want = BiPoly({(0, 1): 1, (1, 0): 1}) * BiPoly({(0, 1): 1, (3, 0): 1})
    assert reverse_in_y(p * p3, 2) == want
    with pytest.raises(DegreeExceeded):
        reverse_in_y(BiPoly({(0, 3): 1}), 2)


def test_evaluate_at_one():
    assert evaluate(UniPoly([1, 1, 1]), 1) == 3
    assert evaluate(q(7), 1) == 1
    r = RatFunc(1 - q(4), 1 - q(2))
    assert evaluate(r, 1) == 2


def test_shift_needs_divisibility():
    assert (q(3) + q(2)).shift(-2) == q() + 1
    with pytest.raises(NotDivisible):
        (q(3) + 1).shift(-1)


def test_json_formats():
    p = UniPoly([Fraction(1, 2), 0, 3])
    assert p.to_json() == {"var": "q", "coeffs": [[1, 2], [0, 1], [3, 1]]}
    b = BiPoly({(2, 0): 1, (0, 1): -1})
    assert b.to_json() == {"vars": ["q", "y"], "terms": [[2, 0, 1, 1], [0, 1, -1, 1]]}


def test_text_rendering_ascends():
    assert str(UniPoly([1, 0, 2, 0, 1])) == "1 + 2q^2 + q^4"
    assert str(UniPoly()) == "0"


@given(unis, unis, unis)
def test_unipoly_ring(a, b, c):
    assert a + b == b + a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@given(unis, unis)
def test_divmod_identity(a, b):
    if not b:
        return
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.degree() < b.degree() or not rem


@given(bis, bis)
def test_exact_division_roundtrip(a, b):
    if not b:
        return
    assert divide_exact(a * b, b) == a


@given(unis, bis)
def test_json_roundtrip(p, b):
    assert UniPoly.from_json(p.to_json()) == p
    assert BiPoly.from_json(b.to_json()) == b


@settings(max_examples=60)
@given(bis, unis, bis, unis)
def test_ratfunc_field(n1, d1, n2, d2):
    if not d1 or not d2:
        return
    r1, r2 = RatFunc(n1, d1), RatFunc(n2, d2)
    assert r1 + r2 == r2 + r1
    assert (r1 + r2) - r2 == r1
    assert r1 * r2 == RatFunc(n1 * BiPoly.coerce(n2), d1 * d2)


@given(unis)
def test_ratfunc_reduces(p):
    if not p:
        return
    r = RatFunc(p * (q() + 1), (q() + 1) * (q() - 2))
    assert r.den.lead() == 1
    assert r == RatFunc(p, q() - 2)
