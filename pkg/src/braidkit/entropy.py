"""Topological entropy estimation and one-step geometric complexity.

The entropy of a braid is the exponential growth rate of loop length under
iterated action.  The estimator iterates the action on the canonical
basepoint multiloop in floating point, renormalizing the coordinates each
round and watching the per-iterate growth of the axis-intersection count;
it reports convergence only when five consecutive growth estimates agree to
within the tolerance.  Finite-order and very-low-entropy braids never
settle, in which case the result is zero with ``converged=False`` and a
warning.
"""
from __future__ import annotations

import dataclasses
import math
import warnings

from .action import _apply_gen, _word_order, act, loopcoords
from .braids import Braid, power
from .loops import Loop, _intaxis_from_ab, canonical_loop, intaxis, minlength

NONCONVERGENCE_WARNING = (
    "Failed to converge to requested tolerance; braid is likely finite-order "
    "or has low entropy.  Returning zero entropy."
)

_WINDOW = 5


@dataclasses.dataclass(frozen=True)
class EntropyResult:
    value: float
    converged: bool
    iterations: int

    def __float__(self):
        return self.value


def _as_braid(b) -> Braid:
    if hasattr(b, "to_braid"):
        return b.to_braid()
    return b


def entropy(b, tol: float = 1e-6, maxit: int = 1000) -> EntropyResult:
    """Iterative entropy estimate in natural-log units per braid application."""
    b = _as_braid(b)
    l0 = canonical_loop(b.n, basepoint=True)
    a = [float(x) for x in l0.a]
    bb = [float(x) for x in l0.b]
    word = _word_order(b.word)
    window: list[float] = []
    for it in range(1, maxit + 1):
        m0 = _intaxis_from_ab(a, bb)
        for k in word:
            _apply_gen(a, bb, k)
        m1 = _intaxis_from_ab(a, bb)
        window.append(math.log(m1 / m0))
        if len(window) > _WINDOW:
            window.pop(0)
        if len(window) == _WINDOW and max(window) - min(window) <= tol:
            return EntropyResult(value=sum(window) / _WINDOW, converged=True, iterations=it)
        scale = max(abs(x) for x in a + bb)
        for j in range(len(a)):
            a[j] /= scale
            bb[j] /= scale
    warnings.warn(NONCONVERGENCE_WARNING)
    return EntropyResult(value=0.0, converged=False, iterations=maxit)


def entropy_fixed_iterates(b, l: Loop, k: int) -> float:
    """Growth estimate from exactly ``k`` applications, in exact integers:
    ``log(minlength(b^k * l) / minlength(l)) / k``."""
    if k < 1:
        raise ValueError("need at least one iteration")
    b = _as_braid(b)
    image = act(power(b, k), l)
    num = minlength(image)
    den = minlength(l)
    return (math.log(num) - math.log(den)) / k


def complexity(b) -> float:
    """One-application geometric complexity.

    The braid acts once on the canonical basepoint multiloop (the doubled
    diameter diagram); the log2 of the resulting number of real-axis
    intersections, normalized so the identity braid scores zero, measures
    how much the diagram folds in a single step.
    """
    b = _as_braid(b)
    crossings = intaxis(loopcoords(b))
    folds = (crossings - 2 * (b.n - 2)) // 2
    return math.log2(folds)
