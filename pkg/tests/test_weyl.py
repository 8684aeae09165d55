from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from springerkit import weyl as Wm
from springerkit.poly import BiPoly, RatFunc, UniPoly
from springerkit.weyl import (CharLabel, ClassLabel, WeylType, check_tables, classify, elements,
                              fmt_char, fmt_class, parse_char, parse_class, weyl)

SMALL = ["A1", "A2", "A3", "B1", "B2", "B3", "C2", "C3", "D2", "D3", "D4"]
types = st.sampled_from(SMALL)


def q(k=1):
    return UniPoly.monomial(k)


def test_b1_classes():
    W = weyl("B1")
    got = {(fmt_class(c), s, str(p)) for c, s, p in zip(W.classes, W.sizes, W.char_polys)}
    assert got == {("1;0", 1, "-1 + q"), ("0;1", 1, "1 + q")}


def test_class_counts():
    assert len(weyl("B2").classes) == 5
    assert sum(weyl("B2").sizes) == 8
    assert len(weyl("D2").classes) == 4


@pytest.mark.parametrize("wt", ["A3", "B2", "B3", "C3", "D3", "D4"])
def test_class_sizes_by_brute_force(wt):
    W = weyl(wt)
    cnt = {}
    for w in elements(W.type):
        c = classify(W.type, w)
        cnt[c] = cnt.get(c, 0) + 1
    assert cnt == dict(zip(W.classes, W.sizes))


def test_b1_table():
    W = weyl("B1")
    ix = W.char_index
    assert sorted(map(tuple, W.table)) == [(1, -1), (1, 1)]
    assert W.table[ix[W.trivial_label()]] == [1, 1]


def test_b2_reflection_is_one_one():
    W = weyl("B2")
    x = CharLabel((1,), (1,), None)
    assert W.degree_of(x) == 2
    assert W.table[W.char_index[x]] == W.reflection().values


@pytest.mark.parametrize("wt", SMALL + ["B4", "C4", "D5", "A5"])
def test_tables(wt):
    assert check_tables(wt).ok


@given(types)
def test_sign_is_determinant(wt):
    W = weyl(wt)
    det = [(-1) ** W.rank * p[0] for p in W.char_polys]
    assert W.table[W.char_index[W.sign_label()]] == det


@given(types)
def test_inner_products(wt):
    W = weyl(wt)
    t = W.trivial()
    assert W.inner(t.values, t.values) == 1
    for i, row in enumerate(W.table):
        for j, col in enumerate(W.table):
            assert W.inner(row, col) == (i == j)


@given(types)
def test_fake_degrees(wt):
    W = weyl(wt)
    for x in W.chars:
        f = W.fake_degree(x)
        assert f(1) == W.degree_of(x)
        assert f.nonnegative()
    assert W.fake_degree(W.trivial_label()) == UniPoly.const(1)
    assert W.fake_degree(W.sign_label()) == q(W.N)


def test_fake_degree_examples():
    assert weyl("B2").fake_degree(weyl("B2").sign_label()) == q(4)
    assert weyl("B1").fake_degree(CharLabel((), (1,), None)) == q()
    assert weyl("A1").fake_degree(CharLabel((1, 1), None, None)) == q()


def test_degrees():
    assert Wm.degrees(WeylType("B", 2)) == ([2, 4], 4, 4)
    ds, N, _ = Wm.degrees(WeylType("D", 4))
    assert sorted(ds) == [2, 4, 4, 6] and N == 12
    assert Wm.degrees(WeylType("A", 1))[:2] == ([2], 1)


def test_induce_trivial():
    W = weyl("B2")
    allJ = W.induce_trivial({1, 2})
    assert allJ.values == [1] * len(W.classes)
    reg = W.induce_trivial(set())
    ident = W.class_index[W.identity]
    assert reg.values[ident] == 8 and sum(abs(v) for v in reg.values) == 8
    assert W.induce_trivial({1}).values[ident] == 4


def test_lambda_powers():
    W = weyl("B2")
    V = W.reflection()
    assert W.lambda_power(V, 0).values == [1] * len(W.classes)
    assert W.lambda_power(V, 1).values == V.values
    l2 = W.lambda_power(V, 2).values
    assert l2 == [(-1) ** W.rank * p[0] for p in W.char_polys]


@given(types)
def test_lambda_powers_of_v(wt):
    W = weyl(wt)
    n = W.rank
    if wt == "D2":
        return  # A1 x A1: V itself is reducible
    V = W.reflection()
    for j in range(n + 1):
        L = W.lambda_power(V, j)
        dec = {x: m for x, m in W.decompose(L).items() if m}
        if W.family == "A":
            assert dec == {CharLabel(tuple(sorted([n + 1 - j] + [1] * j, reverse=True)), None, None): 1}
        else:
            a, b = ((n - j,) if n - j else ()), tuple([1] * j)
            if W.family == "D":
                a, b = Wm.d_canonical(a, b)
            assert dec == {CharLabel(a, b, None): 1}


def test_molien_examples():
    W = weyl("B1")
    y = BiPoly({(0, 1): 1})
    want = RatFunc(BiPoly({(0, 0): 1, (1, 1): 1}), 1 - q(2))
    assert W.molien_tau(W.trivial_label()) == want


@given(types)
def test_molien_at_y_zero(wt):
    W = weyl(wt)
    tau = W.molien_tau(W.trivial_label())
    num0 = tau.num.y_coeff(0) if isinstance(tau.num, BiPoly) else tau.num
    den = UniPoly.const(1)
    for d in W.degrees:
        den = den * (1 - q(d))
    assert RatFunc(num0, tau.den) == RatFunc(UniPoly.const(1), den)


def test_label_roundtrip():
    for wt in ["B3", "D4", "A3"]:
        W = weyl(wt)
        for x in W.chars:
            assert parse_char(fmt_char(x), W.family) == x
        for c in W.classes:
            assert parse_class(fmt_class(c), W.family) == c


def test_degenerate_label_needs_tag():
    with pytest.raises(ValueError):
        parse_char("1|1", "D")


def test_cache_roundtrip(tmp_path, monkeypatch):
    monkeypatch.setenv("SPRINGERKIT_CACHE", str(tmp_path))
    W1 = Wm.Weyl(WeylType("D", 4), use_cache=True)
    assert (tmp_path / "D4.json").exists()
    W2 = Wm.Weyl(WeylType("D", 4), use_cache=True)
    W3 = Wm.Weyl(WeylType("D", 4), use_cache=False)
    assert W1.table == W2.table == W3.table


def test_corrupt_cache_is_rebuilt(tmp_path, monkeypatch):
    monkeypatch.setenv("SPRINGERKIT_CACHE", str(tmp_path))
    (tmp_path / "B2.json").write_text("{not json")
    W = Wm.Weyl(WeylType("B", 2), use_cache=True)
    assert check_tables("B2").ok and len(W.table) == 5
