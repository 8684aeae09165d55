"""
Partitions and bipartitions.

A partition is a weakly decreasing tuple of positive ints.  Boxes are
indexed (i, j) from zero, row i, column j, with (0, 0) at the top left.
"""

from collections import Counter
from functools import lru_cache


class SizeMismatch(ValueError):
    pass


def normalize(parts):
    """Sort descending and drop zeros."""
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


@lru_cache(maxsize=None)
def partitions(n, maxpart=None):
    """All partitions of n, in reverse lexicographic order."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def bipartitions(n):
    """Pairs (alpha, beta) with |alpha| + |beta| = n."""
    out = []
    for k in range(n + 1):
        for a in partitions(n - k):
            for b in partitions(k):
                out.append((a, b))
    return out


def conjugate(lam):
    lam = normalize(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def boxes(lam):
    return [(i, j) for i, p in enumerate(lam) for j in range(p)]


def hooks_and_contents(lam):
    """(hook length, content) for each box, row-major."""
    lam = normalize(lam)
    lc = conjugate(lam)
    return [(lam[i] - j + lc[j] - i - 1, j - i) for i, j in boxes(lam)]


def hook_lengths(lam):
    return [h for h, _ in hooks_and_contents(lam)]


def n_stat(lam):
    return sum(i * p for i, p in enumerate(normalize(lam)))


def num_syt(lam):
    """Number of standard tableaux via the hook length formula."""
    lam = normalize(lam)
    num = 1
    for k in range(2, sum(lam) + 1):
        num *= k
    den = 1
    for h in hook_lengths(lam):
        den *= h
    return num // den


def z_lambda(lam):
    """Order of the centralizer in S_n of a permutation of cycle type lam."""
    z = 1
    for v, m in Counter(lam).items():
        z *= v ** m
        for k in range(2, m + 1):
            z *= k
    return z


def dominates(lam, mu):
    lam, mu = normalize(lam), normalize(mu)
    if sum(lam) != sum(mu):
        raise SizeMismatch("%s and %s have different sizes" % (lam, mu))
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def multiplicities(lam):
    return Counter(lam)


def orbit_valid(family, n, lam):
    """Is lam the Jordan type of a nilpotent orbit of type family_n?"""
    lam = normalize(lam)
    c = Counter(lam)
    if family == "A":
        return sum(lam) == n + 1
    if family == "B":
        size, bad = 2 * n + 1, 0
    elif family in ("C",):
        size, bad = 2 * n, 1
    elif family == "D":
        size, bad = 2 * n, 0
    else:
        raise ValueError("unknown family %r" % family)
    if sum(lam) != size:
        return False
    return all(m % 2 == 0 for v, m in c.items() if v % 2 == bad)


def is_very_even(lam):
    lam = normalize(lam)
    return bool(lam) and all(v % 2 == 0 and m % 2 == 0 for v, m in Counter(lam).items())


# text encodings

def fmt_partition(lam):
    lam = normalize(lam)
    return ".".join(str(p) for p in lam) if lam else "0"


def parse_partition(s):
    s = s.strip()
    if s in ("", "0", "-"):
        return ()
    try:
        parts = [int(x) for x in s.replace(",", ".").split(".")]
    except ValueError:
        raise ValueError("bad partition %r" % s)
    if any(p < 0 for p in parts):
        raise ValueError("negative part in %r" % s)
    return normalize(parts)


def fmt_bipartition(a, b):
    return "%s|%s" % (fmt_partition(a), fmt_partition(b))


def parse_bipartition(s):
    if "|" not in s:
        raise ValueError("bipartition needs '|': %r" % s)
    a, b = s.split("|", 1)
    return parse_partition(a), parse_partition(b)
