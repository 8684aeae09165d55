from fractions import Fraction

import pytest

from springerkit.green import (centralizer_orders, check_structure, green_table, group_order_poly,
                               lusztig_shoji, omega, orbit_counts, same_table, s_function,
                               verify_orthogonality)
from springerkit.poly import UniPoly
from springerkit.springer import ComponentGroup, parse_orbit
from springerkit.weyl import CharLabel, weyl

ONE = UniPoly.const(1)


def q(k=1):
    return UniPoly.monomial(k)


def test_omega_a1():
    W = weyl("A1")
    om = omega(W)
    # chars in W order: [2] (trivial), [1,1] (sign)
    assert W.chars[0] == CharLabel((2,), None, None)
    assert om == [[q(2), q()], [q(), q(2)]]


@pytest.mark.parametrize("wt", ["A2", "B2", "D4"])
def test_omega_symmetric(wt):
    om = omega(weyl(wt))
    assert all(om[i][j] == om[j][i] for i in range(len(om)) for j in range(len(om)))


def test_a1_green():
    T = green_table("A1")
    W = T.weyl
    reg = parse_orbit("2", "A", 1)
    zero = parse_orbit("1.1", "A", 1)
    assert T.q_e(reg)[W.chars[0]] == ONE and not T.q_e(reg)[W.chars[1]]
    assert T.q_e(zero)[W.chars[0]] == ONE and T.q_e(zero)[W.chars[1]] == q()


def test_b2_zero_orbit_is_fake_degrees():
    T = green_table("B2")
    W = T.weyl
    q0 = T.q_e(T.order[0])
    assert all(q0[x] == W.fake_degree(x) for x in W.chars)


def test_d4_remark():
    T = green_table("D4")
    W = T.weyl
    V2 = W.lambda_power(W.reflection(), 2)
    V3 = W.lambda_power(W.reflection(), 3)

    def pair(o, L):
        Q = T.q_e(o)
        dec = W.decompose(L)
        return sum((Q[x].scale(m) for x, m in dec.items() if m), UniPoly())

    o1 = parse_orbit("3.3.1.1", "D", 4)
    o2 = parse_orbit("3.2.2.1", "D", 4)
    assert pair(o1, V2) == q(3)
    assert pair(o1, V3) == UniPoly()
    assert pair(o2, V2) == UniPoly()


@pytest.mark.parametrize("wt", ["A1", "A2", "A3", "A4", "B2", "C2", "B3", "C3", "D4"])
def test_structure_and_orthogonality(wt):
    T = green_table(wt)
    assert check_structure(T) == []
    assert verify_orthogonality(T) == []


@pytest.mark.parametrize("wt", ["B3", "C3", "D4"])
def test_tiebreak_independence(wt):
    assert same_table(lusztig_shoji(weyl(wt), 0), lusztig_shoji(weyl(wt), 1))


def test_centralizers_a1():
    T = green_table("A1")
    reg = parse_orbit("2", "A", 1)
    zero = parse_orbit("1.1", "A", 1)
    assert list(centralizer_orders(T, reg).values()) == [q()]
    assert list(centralizer_orders(T, zero).values()) == [group_order_poly(T.weyl)]


@pytest.mark.parametrize("wt", ["B2", "C2", "B3", "C3", "D4", "A3"])
def test_centralizers_polynomial(wt):
    T = green_table(wt)
    gf = group_order_poly(T.weyl)
    total = UniPoly()
    for o in T.order:
        Z = centralizer_orders(T, o)
        for a, z in Z.items():
            assert z.is_integral() and z.lead() > 0
        total = total + sum(orbit_counts(T, o).values(), UniPoly())
    # all nilpotent elements: q^{2N} (Steinberg)
    assert total == q(2 * T.weyl.N)


def test_s_values_depend_on_product():
    T = green_table("D4")
    for o in T.order:
        F = s_function(T, o)
        assert F[ComponentGroup(o).trivial_char()]


def test_b2_3_1_1_counts():
    T = green_table("B2")
    o = parse_orbit("3.1.1", "B", 2)
    phis, S = T.S[o]
    counts = orbit_counts(T, o)
    assert sum(counts.values(), UniPoly()) == S[phis.index(ComponentGroup(o).trivial_char())][phis.index(ComponentGroup(o).trivial_char())]
