#!/usr/bin/env python3
"""Loops on the punctured disk: coordinates, intersection numbers, lengths."""
import braidkit as bk

## a multiloop is encoded by an even-length integer vector
l = bk.make_loop([-1, 1, -2, 0, -1, 0])
print("loop:", l)
print("a half:", l.a, " b half:", l.b, " punctures:", l.n)

## intersection numbers with the standard vertical reference lines
inums = bk.intersec(l)
print("mu:", inums.mu)
print("nu:", inums.nu)

## taut length with unit-spaced punctures, and crossings of the real axis
print("minlength:", bk.minlength(l))
print("intaxis:  ", bk.intaxis(l))

## several loops at once
ll = bk.make_loop([[-1, 1, -2, 0], [1, -2, 3, 4]])
print("batch minlengths:", [bk.minlength(x) for x in ll])

## braids act on loops; the first word entry acts first
b = bk.make_braid([-1], 5)
print("sigma_1^-1 moves the loop to:", b * l)

b2 = bk.make_braid([1, -2])
print("batch action:", [str(x) for x in b2 * ll])

## the canonical multiloop anchored at a basepoint puncture on the right;
## acting on it gives a normal form that decides braid equality
e = bk.canonical_loop(5, basepoint=True)
print("canonical:", e, " punctures:", e.n, " including anchor:", e.totaln)
print("loopcoords of [1 2 3 -4]:", bk.loopcoords(bk.make_braid([1, 2, 3, -4])))
