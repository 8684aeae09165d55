"""Graded occurrences of V in H*(B_e): exponents m_j and the character pi_s."""

from springerkit.green import green_table
from springerkit.identities import exterior_profile, spaltenstein_mj
from springerkit.springer import ComponentGroup, orbits

for wt in ["C3", "D5"]:
    T = green_table(wt)
    print(wt)
    for o in orbits(wt):
        prof = exterior_profile(T, o)
        G = ComponentGroup(o)
        line = "  %-16s m = %s" % (o, sorted(prof.exponents))
        if o.family == "D":
            line += "  predicted %s" % spaltenstein_mj(o.lam)
        odd = [p for p in prof.pis if p != G.trivial_char()]
        if odd:
            line += "  pi_s = %s" % (G.phi_vector(odd[0]),)
        print(line)
    print()

# Only the last exponent can carry a nontrivial character of A(e).  In type D
# the multiset agrees with the prediction read off from the partition.
