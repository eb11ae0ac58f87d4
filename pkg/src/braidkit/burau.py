"""Reduced Burau representation and the Alexander-Conway polynomial.

The generator on strands ``i, i+1`` of an ``n``-strand braid is represented
on an ``(n-1)``-dimensional space by the identity with row ``i`` replaced by
``(..., 1, -t, t, ...)`` centered on the diagonal (the flanking entries
dropped at the edges); its inverse replaces the row by ``(..., 1/t, -1/t,
1, ...)``.  Matrices act on column vectors, so a word is represented by the
product of its generator matrices with the latest-applied factor leftmost,
matching the loop-action convention.  The determinant of a word's matrix is
``(-t)**writhe``.
"""
from __future__ import annotations

import dataclasses
import numbers
from fractions import Fraction

from .braids import Braid, writhe
from .laurent import LaurentPoly


class FractionalPowersError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class BurauMatrix:
    """Reduced Burau matrix of a braid word; entries are LaurentPoly in
    symbolic mode or plain numbers in evaluated mode."""

    entries: tuple
    symbolic: bool

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def det(self):
        return _det(self.entries)

    def to_json(self) -> dict:
        if self.symbolic:
            rows = [[p.to_json() for p in row] for row in self.entries]
        else:
            rows = [[float(x) if not isinstance(x, int) else x for x in row] for row in self.entries]
        return {"dim": self.dim, "symbolic": self.symbolic, "entries": rows}


def _sym_gen(i: int, n: int, positive: bool):
    t = LaurentPoly.var()
    tinv = LaurentPoly.term(1, -1)
    one = LaurentPoly.const(1)
    zero = LaurentPoly()
    rows = [[one if r == c else zero for c in range(n - 1)] for r in range(n - 1)]
    r = i - 1
    if positive:
        left, diag, right = one, -t, t
    else:
        left, diag, right = tinv, -tinv, one
    if r - 1 >= 0:
        rows[r][r - 1] = left
    rows[r][r] = diag
    if r + 1 < n - 1:
        rows[r][r + 1] = right
    return rows


def _num_gen(i: int, n: int, positive: bool, t):
    tinv = _invert(t)
    rows = [[1 if r == c else 0 for c in range(n - 1)] for r in range(n - 1)]
    r = i - 1
    if positive:
        left, diag, right = 1, -t, t
    else:
        left, diag, right = tinv, -tinv, 1
    if r - 1 >= 0:
        rows[r][r - 1] = left
    rows[r][r] = diag
    if r + 1 < n - 1:
        rows[r][r + 1] = right
    return rows


def _invert(t):
    if isinstance(t, numbers.Integral):
        f = Fraction(1, int(t))
        return int(f) if f.denominator == 1 else f
    return 1 / t


def _mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _det(rows):
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    first = rows[0][0]
    zero_like = first - first if isinstance(first, LaurentPoly) else 0
    total = zero_like
    for j in range(n):
        entry = rows[0][j]
        if isinstance(entry, LaurentPoly) and entry.is_zero():
            continue
        if not isinstance(entry, LaurentPoly) and entry == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in rows[1:]]
        term = entry * _det(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def burau(b: Braid, t=None):
    """Reduced Burau matrix of a braid.

    With ``t=None`` the entries are symbolic Laurent polynomials; otherwise
    each generator matrix is evaluated at ``t`` first (integers stay exact
    through Fractions).
    """
    n = b.n
    if n < 2:
        raise ValueError("need at least 2 strands")
    if t is None:
        one = LaurentPoly.const(1)
        zero = LaurentPoly()
        acc = [[one if r == c else zero for c in range(n - 1)] for r in range(n - 1)]
        for w in b.word:
            g = _sym_gen(abs(w), n, w > 0)
            acc = _mat_mul(g, acc)
        return BurauMatrix(entries=tuple(tuple(r) for r in acc), symbolic=True)
    if isinstance(t, numbers.Integral):
        t = int(t)
    acc = [[1 if r == c else 0 for c in range(n - 1)] for r in range(n - 1)]
    for w in b.word:
        g = _num_gen(abs(w), n, w > 0, t)
        acc = _mat_mul(g, acc)
    acc = [[_simplify_num(x) for x in row] for row in acc]
    return BurauMatrix(entries=tuple(tuple(r) for r in acc), symbolic=False)


def _simplify_num(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def alexander(b: Braid, centered: bool = False) -> LaurentPoly:
    """Alexander-Conway polynomial of the braid closure.

    Computed as ``det(I - B(t)) * (1 - t) / (1 - t^n)`` from the symbolic
    reduced Burau matrix; the division is exact.  The centered form is
    shifted so that ``p(z) == +/- p(1/z)``; when the required shift is a
    half-integer (links of several components) this raises
    :class:`FractionalPowersError`.
    """
    n = b.n
    B = burau(b)
    one = LaurentPoly.const(1)
    zero = LaurentPoly()
    rows = [
        [
            (one if r == c else zero) - B.entries[r][c]
            for c in range(n - 1)
        ]
        for r in range(n - 1)
    ]
    d = _det(rows)
    t = LaurentPoly.var()
    num = d * (one - t)
    den = one - t**n
    poly = num.exact_div(den)
    if not centered:
        return poly
    if poly.is_zero():
        return poly
    span = poly.maxdeg + poly.mindeg
    if span % 2 != 0:
        raise FractionalPowersError("Polynomial with fractional powers.")
    return poly.shift(-span // 2)


def burau_det_matches_writhe(b: Braid) -> bool:
    """Exact check that det(Burau) == (-t)**writhe."""
    w = writhe(b)
    expected = LaurentPoly.term(1 if w % 2 == 0 else -1, w)
    return burau(b).det() == expected
