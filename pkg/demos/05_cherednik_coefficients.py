"""Coefficients of the graded t^n-dimensional module in the Green basis."""

from springerkit import cherednik as ch
from springerkit.green import green_table

for wt, t in [("A1", 5), ("B2", 5), ("C3", 7)]:
    T = green_table(wt)
    F = ch.f_solve(wt, t)
    print("%s, t=%d" % (wt, t))
    for d, f in F.items():
        assert f == ch.f_closed(T, d, t)
        print("  %-14s phi=%-8s f = %s" % (d.orbit, d.phi, f if f else "0"))
    print()

for t in [2, 4]:
    print("B2, t=%d is not very good; multiplicities fail: %s" % (t, ch.falsification("B2", t)))
