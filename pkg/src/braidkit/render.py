"""Deterministic SVG rendering of braid diagrams and loops.

Braid diagrams get one crossing per time slot with an over/under gap chosen
by the generator sign.  Loop pictures are reconstructed from intersection
numbers: every strand crossing of a vertical reference line becomes one
junction point on that line, so counting path crossings per line in the SVG
reproduces the loop's intersection numbers exactly; beyond those counts the
picture is a best-effort visual.
"""
from __future__ import annotations

import dataclasses

from .braids import AnnularBraid
from .config import properties
from .loops import Loop, intersec


@dataclasses.dataclass
class RenderSpec:
    direction: str | None = None     # bt | tb | lr | rl (None: global default)
    over_under: bool | None = None   # None: global default
    width: int = 480
    height: int = 360
    stroke: str = "#1f4e79"
    stroke_width: float = 2.0

    def resolved_direction(self) -> str:
        return self.direction or properties().braid_plot_dir

    def resolved_over_under(self) -> bool:
        if self.over_under is None:
            return properties().gen_plot_over_under
        return self.over_under


_PALETTE = ["#1f4e79", "#b2182b", "#2a7f3f", "#8c510a", "#6a51a3", "#01665e", "#c51b7d", "#4d4d4d"]


def _svg_header(width, height):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )


def _polyline(points, color, width, cls=""):
    pts = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    klass = f' class="{cls}"' if cls else ""
    return f'<polyline{klass} points="{pts}" fill="none" stroke="{color}" stroke-width="{width}"/>'


def render_braid(b, spec: RenderSpec | None = None) -> str:
    """Braid diagram as an SVG document string."""
    spec = spec or RenderSpec()
    direction = spec.resolved_direction()
    over_under = spec.resolved_over_under()
    annular = isinstance(b, AnnularBraid)
    word = b.word
    n = b.n
    L = max(len(word), 1)

    # logical layout: position q in [1, n], time t in [0, L]; transform later
    margin = 30
    if direction in ("bt", "tb"):
        W, H = spec.width, spec.height
        sq = (W - 2 * margin) / max(n - 1, 1)
        st = (H - 2 * margin) / L

        def xy(q, t):
            x = margin + (q - 1) * sq
            y = H - margin - t * st if direction == "bt" else margin + t * st
            return x, y

    else:
        W, H = spec.width, spec.height
        sq = (H - 2 * margin) / max(n - 1, 1)
        st = (W - 2 * margin) / L

        def xy(q, t):
            y = margin + (q - 1) * sq
            x = margin + t * st if direction == "lr" else W - margin - t * st
            return x, y

    # follow each strand through the word; break the under strand at crossings
    pos_of = list(range(1, n + 1))  # strand s (0-based) -> current position
    segments = {s: [[xy(pos_of[s], 0)]] for s in range(n)}
    for k, w in enumerate(word):
        i = abs(w)
        t0, t1 = k, k + 1
        at = {p: s for s, p in enumerate(pos_of)}
        s_left, s_right = at[i], at[i + 1]
        # left strand passes over for a positive generator
        over_left = w > 0
        for s, p0, p1 in ((s_left, i, i + 1), (s_right, i + 1, i)):
            is_over = (s == s_left) == over_left
            if is_over or not over_under:
                segments[s][-1].append(xy(p1, t1))
            else:
                mid_t = t0 + 0.5
                mid_q = (p0 + p1) / 2
                gap = 0.18
                qa = p0 + (mid_q - p0) * (1 - gap * 2)
                ta = t0 + 0.5 * (1 - gap * 2)
                segments[s][-1].append(xy(qa, ta))
                segments[s].append([xy(p1 - (p1 - mid_q) * (1 - gap * 2), t1 - 0.5 * (1 - gap * 2))])
                segments[s][-1].append(xy(p1, t1))
        for s in range(n):
            if s not in (s_left, s_right):
                segments[s][-1].append(xy(pos_of[s], t1))
        pos_of[s_left], pos_of[s_right] = i + 1, i
    if not word:
        for s in range(n):
            segments[s][-1].append(xy(pos_of[s], L))

    parts = [_svg_header(W, H)]
    for s in range(n):
        color = _PALETTE[s % len(_PALETTE)]
        if annular and s == n - 1:
            color = "#2a7f3f"  # the fixed center of the annulus
        for seg in segments[s]:
            if len(seg) >= 2:
                parts.append(_polyline(seg, color, spec.stroke_width, cls=f"strand strand-{s + 1}"))
    for k, w in enumerate(word):
        qx, qy = xy(abs(w) + 0.5, k + 0.5)
        parts.append(
            f'<circle class="crossing {"over" if w > 0 else "under"}" data-slot="{k}" '
            f'data-sign="{1 if w > 0 else -1}" cx="{qx:.2f}" cy="{qy:.2f}" r="0.5" '
            f'fill="none" stroke="none"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def render_loop(l: Loop, spec: RenderSpec | None = None) -> str:
    """Loop picture as an SVG document string.

    Vertical reference lines sit halfway between punctures.  Every strand
    crossing of a line becomes one junction point shared by the pieces on
    both sides, and every passage above or below a puncture becomes a short
    flat segment crossing the puncture's vertical ray, so counting path
    crossings per line/ray in the SVG recovers the intersection numbers.
    """
    spec = spec or RenderSpec()
    inums = intersec(l)
    mu, nu = inums.mu, inums.nu
    N = l.totaln
    m = N - 2
    W, H = spec.width, spec.height
    margin = 30
    sx = (W - 2 * margin) / (N + 1)

    def X(u):
        return margin + u * sx

    Y0 = H / 2

    def strip_counts(i):
        b_i = l.b[i]
        lft = b_i if b_i > 0 else 0
        rgt = -b_i if b_i < 0 else 0
        through = nu[i] - 2 * lft
        over = through // 2 - l.a[i]
        under = through // 2 + l.a[i]
        return over, under, lft, rgt

    peak_levels = [1]
    for i in range(m):
        over, under, lft, rgt = strip_counts(i)
        peak_levels.append(over + lft + rgt)
        peak_levels.append(under + lft + rgt)
    maxlevel = max(max(nu, default=0) / 2 + 1, max(peak_levels) + 1)
    dy = (H / 2 - margin) / maxlevel

    def Y(level):
        return Y0 - level * dy

    # junction points on each vertical line, top to bottom, never on the axis
    junctions = []
    for g in range(N - 1):
        cnt = nu[g]
        xg = X(g + 1.5)
        junctions.append([(xg, Y((cnt - 1) / 2 - k)) for k in range(cnt)])

    def take(line, over, loops, under):
        """Split a line's junctions: overs on top, loop-end pairs inside,
        unders at the bottom."""
        cnt = len(line)
        tops = [line[k] for k in range(over)]
        bots = [line[cnt - 1 - k] for k in range(under)]
        pairs = [(line[over + k], line[cnt - 1 - under - k]) for k in range(loops)]
        return tops, pairs, bots

    paths = []

    def flat(p, level):
        y = Y(level)
        return (X(p) - 0.18 * sx, y), (X(p) + 0.18 * sx, y)

    # caps wrap the outermost punctures
    for k in range(nu[0] // 2):
        a = junctions[0][k]
        b = junctions[0][nu[0] - 1 - k]
        xw = X(1) - (0.3 + 0.1 * k) * sx
        paths.append([a, (xw, a[1]), (xw, b[1]), b])
    if N >= 2:
        for k in range(nu[-1] // 2):
            a = junctions[-1][k]
            b = junctions[-1][nu[-1] - 1 - k]
            xw = X(N) + (0.3 + 0.1 * k) * sx
            paths.append([a, (xw, a[1]), (xw, b[1]), b])

    for i in range(m):
        p = i + 2
        over, under, lft, rgt = strip_counts(i)
        ltops, lpairs, lbots = take(junctions[i], over, lft, under)
        rtops, rpairs, rbots = take(junctions[i + 1], over, rgt, under)
        for k in range(over):
            u1, u2 = flat(p, lft + rgt + over - k)
            paths.append([ltops[k], u1, u2, rtops[k]])
        for k in range(under):
            d1, d2 = flat(p, -(lft + rgt + under - k))
            paths.append([lbots[k], d1, d2, rbots[k]])
        for k in range(lft):
            a, b = lpairs[k]
            u1, u2 = flat(p, lft - k)
            d1, d2 = flat(p, -(lft - k))
            turn = X(p) + (0.3 + 0.08 * k) * sx
            paths.append([a, u1, u2, (turn, u2[1]), (turn, d2[1]), d2, d1, b])
        for k in range(rgt):
            a, b = rpairs[k]
            u1, u2 = flat(p, rgt - k)
            d1, d2 = flat(p, -(rgt - k))
            turn = X(p) - (0.3 + 0.08 * k) * sx
            paths.append([a, u2, u1, (turn, u1[1]), (turn, d1[1]), d1, d2, b])

    parts = [_svg_header(W, H)]
    parts.append(
        f'<line x1="{X(0.4):.2f}" y1="{Y0:.2f}" x2="{X(N + 0.6):.2f}" y2="{Y0:.2f}" '
        f'stroke="#bbbbbb" stroke-width="1"/>'
    )
    for p in range(1, N + 1):
        fill = "#2a7f3f" if (l.basepoint and p == N) else "#222222"
        parts.append(f'<circle cx="{X(p):.2f}" cy="{Y0:.2f}" r="3.5" fill="{fill}"/>')
    for seg in paths:
        parts.append(_polyline(seg, spec.stroke, spec.stroke_width, cls="loop-strand"))
    parts.append("</svg>")
    return "\n".join(parts)
