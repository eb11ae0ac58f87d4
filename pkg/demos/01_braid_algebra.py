#!/usr/bin/env python3
"""Tour of the braid algebra: words, products, equality, simplification."""
import braidkit as bk

# A braid is a word of signed generator indices; the strand count defaults
# to the smallest that fits the word.
a = bk.make_braid([1, -2])
print("a =", a, "on", a.n, "strands")
print("a on 4 strands:", bk.make_braid([1, -2], 4).n)

b = bk.make_braid([1, 2])
print("a*b =", a * b)
print("b*a =", b * a)
print("a^5 =", a ** 5)
print("a^-1 =", bk.inverse(a))

# The product a * a^-1 is the identity, but the word does not simplify by
# itself; compact() shortens it, istrivial() decides exactly.
e = a * bk.inverse(a)
print("a*a^-1 =", e)
print("compact:", bk.compact(e))
print("istrivial:", bk.istrivial(e))

# Word-level versus group-level equality.
c = bk.make_braid([1, -2, 2, 1, 2, -1, -2, -1])
print("a == c:", bk.equals(a, c), "   lexeq:", bk.lexeq(a, c))

# Extracting strands and laying braids side by side.
d = bk.make_braid([1, 2, -3])
print("subbraid keeping strands 1,2,4:", bk.subbraid(d, [1, 2, 4]))
print("tensor:", bk.tensor(d, a))

# Permutation, purity, writhe.
print("perm:", bk.perm(d), " pure:", bk.ispure(d))
print("perm of d^4:", bk.perm(d ** 4), " pure:", bk.ispure(d ** 4))
print("writhe:", bk.writhe(d))

# Stock constructions.
print("random 5-strand, 10 generators:", bk.random_braid(5, 10, seed=42))
print("half twist on 5 strands:", bk.halftwist(5))
print("full twist is pure:", bk.ispure(bk.fulltwist(5)))

# Annular braids: punctures in a ring around a fixed center.  The extra
# ring generator carries the outermost puncture around the center.
ann = bk.make_annular_braid([1, 2, -3])
print("annular braid:", ann, " strands:", ann.n, " moving:", ann.nann)
print("as a standard braid:", ann.to_braid())
