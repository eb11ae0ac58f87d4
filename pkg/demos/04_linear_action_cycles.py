#!/usr/bin/env python3
"""The effective linear action of a braid and its limit cycles.

Once the max/min branches of the coordinate update are resolved at a given
loop, one application of the braid is a plain integer matrix.  Iterating the
braid makes the matrix sequence eventually periodic, and the cycle's product
carries the stretching rate as its leading eigenvalue.
"""
import math

import braidkit as bk

b = bk.make_braid([1, -2])
l = bk.make_loop([0, -1])
image, M = bk.act_with_matrix(b, l)
print("image:", image)
print("matrix:")
for row in M.entries:
    print("  ", row)
print("matrix @ coords:", M.apply(l.coords), "== image coords:", image.coords)

# iterate from ((1, 1)): the matrix settles after one step
l = bk.make_loop([1, 1])
for k in range(3):
    l, M = bk.act_with_matrix(b, l)
    print(f"iterate {k + 1}: loop {l}, matrix rows {M.entries}")

r = bk.cycle(b, l0=bk.make_loop([1, 1]))
print("preperiod:", r.preperiod, " period:", r.period)

# a finite-order braid also reaches a cycle, just with a longer period
print("period of < 1 2 3 >:", bk.cycle(bk.make_braid([1, 2, 3])).period)

# period 2 on five strands, no basepoint
r2 = bk.cycle(bk.make_braid([-1, -2, -3, 4]), l0=bk.canonical_loop(5, basepoint=False))
print("period:", r2.period)
for M in r2.matrices:
    print("--")
    for row in M.entries:
        print("  ", row)

# the cycle product knows the dilatation
for word in ([1, -2], [1, 2, -3]):
    braid = bk.make_braid(word)
    rc = bk.cycle(braid)
    prod = rc.product()
    coeffs = bk.charpoly(prod)
    radius = bk.spectral_radius(prod)
    from braidkit.linalg import poly_str

    print(f"{braid}: charpoly {poly_str(coeffs)}")
    print(f"   log(radius)/period = {math.log(radius) / rc.period:.6f}"
          f"   entropy = {bk.entropy(braid).value:.6f}")
