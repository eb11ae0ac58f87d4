#!/usr/bin/env python3
"""Burau matrices and Alexander-Conway polynomials of braid closures."""
import braidkit as bk
from braidkit import alexander, burau

b = bk.make_braid([1, -2])

# evaluated entries
print("Burau at t = -1:")
for row in burau(b, -1).entries:
    print("  ", row)

# symbolic Laurent-polynomial entries
B = burau(b)
print("symbolic Burau:")
for row in B.entries:
    print("  [", ", ".join(p.display("t") for p in row), "]")
print("entry (2,2):", B[1, 1].display("t"))
print("det:", B.det().display("t"), "  (-t)^writhe with writhe", bk.writhe(b))

# knot and link invariants of the closure
print("trefoil      :", alexander(bk.make_braid([1, 1, 1])).display())
fig8 = bk.make_braid([1, -2, 1, -2])
print("figure-eight :", alexander(fig8).display())
print("   centered  :", alexander(fig8, centered=True).display())
print("Hopf link    :", alexander(bk.make_braid([1, 1])).display())
try:
    alexander(bk.make_braid([1, 1]), centered=True)
except bk.FractionalPowersError as err:
    print("centered Hopf:", err)

# the invariant does not care how the closure is presented
c = bk.make_braid([2, 1, -2], 3)
conj = bk.mul(bk.mul(c, fig8), bk.inverse(c))
print("conjugate word gives the same polynomial:",
      alexander(conj) == alexander(fig8))
