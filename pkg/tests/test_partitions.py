from collections import Counter
from math import factorial

import pytest
from hypothesis import given, strategies as st

from springerkit import partitions as P

parts = st.integers(0, 9).flatmap(lambda n: st.sampled_from(P.partitions(n)))


def test_conjugate_examples():
    assert P.conjugate((3, 1)) == (2, 1, 1)
    assert P.conjugate(()) == ()
    assert P.conjugate((2, 2)) == (2, 2)


def test_hooks_and_contents_examples():
    assert P.hooks_and_contents((1,)) == [(1, 0)]
    assert Counter(P.hooks_and_contents((2, 1))) == Counter([(3, 0), (1, 1), (1, -1)])
    assert Counter(P.hooks_and_contents((2,))) == Counter([(2, 0), (1, 1)])


def test_n_stat():
    assert P.n_stat((5,)) == 0
    assert P.n_stat((1, 1, 1)) == 3
    assert P.n_stat((2, 1)) == 1


def test_dominance():
    assert P.dominates((4,), (2, 2))
    assert not P.dominates((2, 2), (3, 1))
    assert P.dominates((3, 1), (2, 2))
    with pytest.raises(P.SizeMismatch):
        P.dominates((3,), (1, 1))


def test_orbit_valid():
    assert P.orbit_valid("B", 2, (5,))
    assert not P.orbit_valid("C", 2, (3, 1))
    assert P.orbit_valid("D", 4, (3, 3, 1, 1))
    assert P.orbit_valid("A", 2, (2, 1))


def test_partition_counts():
    assert [len(P.partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert len(P.bipartitions(3)) == 10


def test_label_roundtrip():
    for lam in P.partitions(6):
        assert P.parse_partition(P.fmt_partition(lam)) == lam
    assert P.parse_bipartition("2.1|0") == ((2, 1), ())


@given(parts)
def test_conjugate_involution(lam):
    assert P.conjugate(P.conjugate(lam)) == lam


@given(parts)
def test_hooks_of_conjugate(lam):
    assert len(P.hooks_and_contents(lam)) == sum(lam)
    assert sorted(P.hook_lengths(lam)) == sorted(P.hook_lengths(P.conjugate(lam)))
    assert sorted(c for _, c in P.hooks_and_contents(lam)) == \
        sorted(-c for _, c in P.hooks_and_contents(P.conjugate(lam)))


@given(parts)
def test_n_stat_via_conjugate(lam):
    lc = P.conjugate(lam)
    assert P.n_stat(lam) == sum(c * (c - 1) // 2 for c in lc)


@given(st.integers(0, 9))
def test_syt_square_sum(n):
    assert sum(P.num_syt(l) ** 2 for l in P.partitions(n)) == factorial(n)
    assert sum(factorial(n) // P.z_lambda(l) for l in P.partitions(n)) == factorial(n)


@given(parts, parts)
def test_dominance_antisymmetric(a, b):
    if sum(a) != sum(b):
        return
    if P.dominates(a, b) and P.dominates(b, a):
        assert a == b
    assert P.dominates(a, b) == P.dominates(P.conjugate(b), P.conjugate(a))
