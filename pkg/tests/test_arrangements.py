from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from springerkit import arrangements as A
from springerkit.green import green_table
from springerkit.poly import UniPoly
from springerkit.springer import parse_orbit
from springerkit.weyl import WeylType, weyl


def x(k=1):
    return UniPoly.monomial(k)


def test_root_counts():
    for wt, N in [("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12)]:
        R = A.RootSystem(wt)
        assert R.N == N and len(R.roots) == 2 * N
        assert all(tuple(-c for c in r) in R.roots for r in R.roots)


def test_full_and_empty_arrangements():
    full = A.build_arrangement("B3", ())
    assert len(full.hyperplanes) == 9 and len(full.ambient) == 3
    empty = A.build_arrangement("B3", {1, 2, 3})
    assert empty.hyperplanes == [] and empty.ambient == []
    assert A.characteristic_polynomial(empty) == UniPoly.const(1)


def test_b2_examples():
    assert A.characteristic_polynomial(A.build_arrangement("B2")) == (x() - 1) * (x() - 3)
    short = A.build_arrangement("B2", {2})
    assert len(short.ambient) == 1 and len(short.hyperplanes) >= 1
    assert A.characteristic_polynomial(short) == x() - 1
    assert A.os_exponents("B2", {1}) == [1] and A.os_exponents("B2", {2}) == [1]


def test_exponents_of_w():
    assert A.os_exponents("B3") == [1, 3, 5]
    assert A.os_exponents("D4") == [1, 3, 3, 5]
    assert A.os_exponents("A3") == [1, 2, 3]


def test_wj_and_fj():
    assert A.wJ_order("A1", ()) == 2
    assert A.f_J("A1", ()) == UniPoly([Fraction(-1, 2), Fraction(1, 2)])
    assert A.wJ_order("B2", ()) == 8
    assert A.f_J("B2", ()) == ((x() - 1) * (x() - 3)).scale(Fraction(1, 8))
    assert A.wJ_order("B3", {1, 2, 3}) == 1 and A.f_J("B3", {1, 2, 3}) == UniPoly.const(1)


def test_d4_3311_levi():
    T = green_table("D4")
    J = A.regular_in_levi(T, parse_orbit("3.3.1.1", "D", 4))
    assert A.os_exponents("D4", J) == [1, 2]


def test_regular_in_levi_extremes():
    for wt in ["B2", "C3", "D4", "A3"]:
        T = green_table(wt)
        assert A.regular_in_levi(T, T.order[0]) == frozenset()
        assert A.regular_in_levi(T, T.order[-1]) == frozenset(range(1, T.weyl.rank + 1))
    T = green_table("B2")
    J = A.regular_in_levi(T, parse_orbit("2.2.1", "B", 2))
    assert A.os_exponents("B2", J) == [1]


def test_non_levi_orbit():
    assert A.regular_in_levi(green_table("D4"), parse_orbit("5.3", "D", 4)) is None


def test_dimension_guard():
    with pytest.raises(A.DimensionTooLarge):
        A.characteristic_polynomial(A.build_arrangement("A9", ()))


def test_rank1_decomp():
    W = weyl("A1")
    tot = [Fraction(0)] * 2
    for J, f in A.decomposition("A1", 5):
        tot = [a + f * b for a, b in zip(tot, W.induce_trivial(J).values)]
    ident = W.class_index[W.identity]
    assert tot[ident] == 5 and tot[1 - ident] == 1


def test_decomp_t1():
    for wt in ["B3", "A3", "D4"]:
        for J, f in A.decomposition(wt, 1):
            assert f == (1 if len(J) == WeylType.parse(wt).rank else 0)


@pytest.mark.parametrize("wt", ["A1", "A2", "A3", "B2", "C2", "B3", "C3", "D4"])
def test_factorisation_and_levi_exponents(wt):
    assert A.check_factorization(wt).ok
    assert A.check_levi_exponents(green_table(wt)).ok


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2", "B3", "C3", "D4"]), st.integers(1, 13))
def test_decomp_property(wt, t):
    from springerkit.cherednik import very_good
    if not very_good(wt, t):
        return
    assert A.verify_decomp(wt, t).ok


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["B3", "C3", "D4", "A3"]), st.data())
def test_fj_degree(wt, data):
    J = data.draw(st.sampled_from(A.j_classes(wt)))
    f = A.f_J(wt, J)
    n = WeylType.parse(wt).rank
    assert f.degree() == n - len(J)
    if len(J) < n:
        assert f(1) == 0


def test_conjugacy_classes_of_subsets():
    assert A.conjugate_j("A3", {1}, {3})
    assert not A.conjugate_j("B2", {1}, {2})
    assert not A.conjugate_j("D4", {1, 2, 3}, {1, 2, 4})
