"""Restricted hyperplane arrangements, their exponents, and the t^n-dimensional module."""

from springerkit import arrangements as arr

wt = "B3"
print("restrictions of the %s arrangement to fixed spaces of parabolic subgroups" % wt)
for J in arr.j_classes(wt):
    A = arr.build_arrangement(wt, J)
    print("  J=%-10s %2d hyperplanes  exponents %s" % (
        sorted(J), len(A.hyperplanes), arr.os_exponents(wt, J)))

for t in [3, 5, 7]:
    parts = ", ".join("J=%s: %s" % (sorted(J), f) for J, f in arr.decomposition(wt, t))
    print("t=%d  %s" % (t, parts))
    assert arr.verify_decomp(wt, t).ok

# The multiplicities f_J(t) are the characteristic polynomials divided by the
# order of the stabiliser of J, and the induced modules add up to t^3 dimensions.
