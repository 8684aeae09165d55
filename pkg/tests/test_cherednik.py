import pytest
from hypothesis import given, settings, strategies as st

from springerkit import cherednik as C
from springerkit.green import green_table
from springerkit.poly import UniPoly
from springerkit.springer import parse_orbit
from springerkit.weyl import WeylType, weyl


def q(k=1):
    return UniPoly.monomial(k)


def test_very_good():
    assert C.very_good("B3", 5)
    assert not C.very_good("B3", 4)
    assert not C.very_good("A2", 3)
    assert C.very_good("A2", 5)
    with pytest.raises(ValueError):
        C.very_good("B2", 0)


def test_rank1_h():
    H = C.h_representation("A1", 5)
    W = weyl("A1")
    triv, sgn = W.chars
    assert H.poly(triv) == UniPoly([1, 0, 1, 0, 1])
    assert H.poly(sgn) == q() + q(3)
    assert H.dimension() == 5


def test_t1_is_trivial():
    for wt in ["B2", "A2", "D4"]:
        H = C.h_representation(wt, 1)
        W = weyl(wt)
        for x in W.chars:
            assert H.poly(x) == (UniPoly.const(1) if x == W.trivial_label() else UniPoly())


def test_rank1_f():
    T = green_table("A1")
    F = C.f_solve("A1", 5)
    zero = parse_orbit("1.1", "A", 1)
    reg = parse_orbit("2", "A", 1)
    got = {d.orbit: f for d, f in F.items()}
    assert got[zero] == 1 + q(2)
    assert got[reg] == q(4)
    for d in F:
        assert C.f_closed(T, d, 5) == F[d]


def test_t1_only_regular():
    for wt in ["B2", "C3"]:
        T = green_table(wt)
        F = C.f_solve(wt, 1)
        for d, f in F.items():
            assert f == (UniPoly.const(1) if d.orbit == T.order[-1] else UniPoly())


@pytest.mark.parametrize("wt", ["A1", "A2", "B2", "C2", "A3", "B3", "C3", "D3"])
def test_f_routes_agree(wt):
    h = max(weyl(wt).degrees)
    T = green_table(wt)
    for t in range(1, 2 * h + 2):
        if not C.very_good(wt, t):
            continue
        assert C.verify_f(wt, t).ok
        assert C.verify_q1(wt, t).ok
        F = C.f_solve(wt, t)
        for d, f in F.items():
            assert C.f_from_h(T, d, t) == f


@pytest.mark.parametrize("wt", ["A1", "A2", "B2", "C2", "A3", "B3", "C3"])
def test_falsification(wt):
    h = max(weyl(wt).degrees)
    for t in range(1, 2 * h + 2):
        assert C.falsification(wt, t) == (not C.very_good(wt, t))


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["A2", "B2", "B3", "C3", "D4"]), st.integers(1, 13))
def test_ungraded_trace(wt, t):
    if C.very_good(wt, t):
        assert C.ungraded_trace_check(wt, t)
        assert C.h_representation(wt, t).dimension() == t ** WeylType.parse(wt).rank


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["B2", "C3", "D4"]), st.integers(1, 9))
def test_h_is_tau_at_minus_qt(wt, t):
    W = weyl(wt)
    H = C.h_representation(wt, t)
    for x in W.chars[:3]:
        tau = W.molien_tau(x)
        assert H.mult[x] == C._at_y(tau, t)
