import pytest
from hypothesis import given, settings, strategies as st

from springerkit import partitions as P
from springerkit.springer import (ComponentGroup, bipartition_of, check_bijection, closure_leq,
                                  dim_springer_fiber, orbit_dim, orbits, parse_orbit, similar_symbols,
                                  springer_correspondence, symbol_of, trivial_char)
from springerkit.weyl import CharLabel, WeylType, degrees


def orb(s, wt):
    return parse_orbit(s, wt[0], int(wt[1:]))


def corr(wt):
    out = {}
    for d in springer_correspondence(WeylType.parse(wt)):
        G = ComponentGroup(d.orbit)
        out.setdefault(str(d.orbit), {})[d.phi == G.trivial_char()] = (d.char.alpha, d.char.beta)
    return out


def test_orbit_lists():
    assert {o.lam for o in orbits(WeylType("B", 2))} == {(5,), (3, 1, 1), (2, 2, 1), (1,) * 5}
    assert {o.lam for o in orbits(WeylType("C", 2))} == {(4,), (2, 2), (2, 1, 1), (1,) * 4}
    d4 = {o.lam for o in orbits(WeylType("D", 4))}
    assert (3, 3, 1, 1) in d4 and (3, 2, 2, 1) in d4
    assert sum(1 for o in orbits(WeylType("D", 4)) if o.lam == (4, 4)) == 2


def test_closure():
    B2 = "B2"
    assert closure_leq(orb("1.1.1.1.1", B2), orb("5", B2))
    assert closure_leq(orb("2.2.1", B2), orb("3.1.1", B2))
    assert not closure_leq(orb("3.1.1", B2), orb("2.2.1", B2))
    assert not closure_leq(orb("4.4:I", "D4"), orb("4.4:II", "D4"))


def test_springer_fiber_dims():
    assert dim_springer_fiber(orb("5", "B2")) == 0
    assert dim_springer_fiber(orb("1.1.1.1.1", "B2")) == 4
    assert dim_springer_fiber(orb("3.1.1", "B2")) == 1


def test_component_groups():
    assert ComponentGroup(orb("3.1.1", "B2")).order() == 2
    for n in range(4, 7):
        o = parse_orbit(".".join(["2", "2"] + ["1"] * (2 * n - 4)), "D", n)
        assert ComponentGroup(o).order() == 1
    # adjoint group: the regular orbit of C_2 has trivial A(e)
    assert ComponentGroup(orb("4", "C2")).order() == 1
    assert ComponentGroup(orb("2.2", "C2")).order() == 2


def test_b2_correspondence():
    c = corr("B2")
    assert c["5"] == {True: ((2,), ())}
    assert c["3.1.1"] == {True: ((1,), (1,)), False: ((1, 1), ())}
    assert c["2.2.1"] == {True: ((), (2,))}
    assert c["1.1.1.1.1"] == {True: ((), (1, 1))}


def test_c2_correspondence():
    c = corr("C2")
    assert c["2.2"] == {True: ((1,), (1,)), False: ((), (2,))}
    assert c["4"] == {True: ((2,), ())}


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_wedge_orbits_b(n):
    c = corr("B%d" % n)
    for j in range(n + 1):
        lam = P.fmt_partition([2 * n - 2 * j + 1] + [1] * (2 * j))
        assert c[lam][True] == (((n - j,) if n - j else ()), (1,) * j)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_wedge_orbits_d_nontrivial(n):
    c = corr("D%d" % n)
    for j in range(2, n - 1):
        lam = P.fmt_partition([2 * n - 2 * j - 1, 3] + [1] * (2 * j - 2))
        got = c[lam][False]
        assert set(map(tuple, got)) == {(n - j,), (1,) * j}


def test_d4_3311():
    c = corr("D4")
    assert set(c["3.3.1.1"][False]) == {(2,), (1, 1)}


@pytest.mark.parametrize("wt", ["B2", "B3", "B4", "B5", "C2", "C3", "C4", "C5", "D2", "D3", "D4", "D5", "D6",
                                "A1", "A3", "A5"])
def test_bijection(wt):
    assert check_bijection(WeylType.parse(wt))


def test_symbols():
    o = orb("1.1.1.1.1", "B2")
    S = symbol_of(o)
    assert similar_symbols(S) == {S}
    assert bipartition_of(S) == CharLabel((), (1, 1), None)


@pytest.mark.parametrize("wt", ["B3", "C3", "D4", "B4", "C4", "D5"])
def test_similarity_classes_are_local_systems(wt):
    W = WeylType.parse(wt)
    for o in orbits(W):
        n_loc = sum(1 for d in springer_correspondence(W) if d.orbit == o)
        assert len(similar_symbols(symbol_of(o))) == n_loc


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["B", "C", "D"]), st.integers(2, 6), st.data())
def test_local_systems_are_characters_of_A(fam, n, data):
    if fam == "D" and n < 2:
        return
    W = WeylType(fam, n)
    o = data.draw(st.sampled_from(orbits(W)))
    G = ComponentGroup(o)
    phis = [d.phi for d in springer_correspondence(W) if d.orbit == o]
    assert G.trivial_char() in phis
    assert len(set(phis)) == len(phis)
    assert all(p in G.characters() for p in phis)
    for p in phis:
        assert G.from_phi_vector(G.phi_vector(p)) == p


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["A", "B", "C", "D"]), st.integers(2, 6), st.data())
def test_orbit_dims(fam, n, data):
    W = WeylType(fam, n)
    o = data.draw(st.sampled_from(orbits(W)))
    _, N, _ = degrees(W)
    assert 0 <= dim_springer_fiber(o) <= N
    assert orbit_dim(o) % 2 == 0
