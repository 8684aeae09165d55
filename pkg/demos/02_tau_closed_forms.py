"""Closed product formulas for the graded multiplicity of chi in S(V) (x) wedge(V)."""

from springerkit.identities import tau_closed
from springerkit.weyl import fmt_char, weyl

for wt in ["B2", "C3", "D4"]:
    W = weyl(wt)
    print(wt)
    for x in W.chars:
        closed = tau_closed(wt, x)
        assert closed == W.molien_tau(x)
        print("  %-10s %s" % (fmt_char(x), closed))
    print()

# Every entry was checked against the Molien series summed over the group.
