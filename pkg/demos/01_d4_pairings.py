"""Which exterior powers of V occur in the Springer representation of two D4 orbits."""

from springerkit.green import green_table
from springerkit.identities import pair_with_wedge
from springerkit.poly import UniPoly
from springerkit.springer import parse_orbit

T = green_table("D4")

for lam in ["3.3.1.1", "3.2.2.1"]:
    o = parse_orbit(lam, "D", 4)
    print("orbit [%s]" % lam.replace(".", ","))
    for i in range(5):
        tot = sum((pair_with_wedge(T, d, i) for d in T.data_for(o)), UniPoly())
        print("  <Q_e, wedge^%d V> = %s" % (i, tot if tot else "0"))

# [3,3,1,1] sees wedge^2 V once, in degree 3, and no higher power.
# [3,2,2,1] sits one step lower in the closure order yet misses wedge^2 V.
