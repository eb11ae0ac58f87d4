"""Braids from sampled 2-D particle trajectories.

Particles are projected onto a line at a chosen angle; every exchange of
adjacent projected positions is a crossing, signed by which particle passes
above in the orthogonal direction.  Sorting the crossings by interpolated
time and re-indexing by the current projected order yields the braid word.
A :class:`DataBraid` additionally retains the crossing times, which is what
finite-time braiding exponents are computed from.

All particles must share one strictly increasing time grid.  Two particles
whose projections coincide (within ``BraidAbsTol``) at a sample leave the
crossing order undefined; that raises :class:`CoincidentProjectionError`
rather than guessing.
"""
from __future__ import annotations

import csv
import dataclasses
import io
import json
import math

import numpy as np
from scipy.optimize import linear_sum_assignment

from .action import act
from .braids import Braid, mul, lexeq
from .config import properties
from .loops import canonical_loop, intaxis, minlength


class CoincidentProjectionError(ValueError):
    pass


class UndersampledDataError(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class TrajectorySet:
    """Sampled tracks: ``times`` of shape (T,), ``positions`` of (T, P, 2)."""

    times: np.ndarray
    positions: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        positions = np.asarray(self.positions, dtype=float)
        if times.ndim != 1 or positions.ndim != 3 or positions.shape[2] != 2:
            raise ValueError("need times (T,) and positions (T, P, 2)")
        if positions.shape[0] != times.shape[0]:
            raise ValueError("times and positions disagree on the sample count")
        if np.any(~np.isfinite(times)) or np.any(~np.isfinite(positions)):
            raise ValueError("times and positions must be finite (no NaNs)")
        if times.size >= 2 and np.any(np.diff(times) <= 0):
            raise ValueError("times must be strictly increasing")
        times.setflags(write=False)
        positions.setflags(write=False)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "positions", positions)

    @property
    def nsamples(self) -> int:
        return self.times.shape[0]

    @property
    def nparticles(self) -> int:
        return self.positions.shape[1]

    def to_json(self) -> dict:
        return {
            "times": self.times.tolist(),
            "positions": self.positions.tolist(),
        }


@dataclasses.dataclass(frozen=True)
class Crossing:
    t: float
    pos: int  # 1-based projected position of the left strand
    sign: int


@dataclasses.dataclass(frozen=True)
class DataBraid:
    """A braid word together with the sorted crossing times that produced it."""

    braid: Braid
    tcross: tuple

    def __post_init__(self):
        tcross = tuple(float(t) for t in self.tcross)
        if len(tcross) != len(self.braid.word):
            raise ValueError("need exactly one crossing time per generator")
        if any(tcross[i] > tcross[i + 1] for i in range(len(tcross) - 1)):
            raise ValueError("crossing times must be nondecreasing")
        object.__setattr__(self, "tcross", tcross)

    def __str__(self):
        return str(self.braid)

    def __mul__(self, other):
        if isinstance(other, DataBraid):
            return db_mul(self, other)
        return NotImplemented

    def __pow__(self, k):
        raise TypeError("powers of a databraid are not defined (they would break time ordering)")

    def inverse(self):
        raise TypeError("the inverse of a databraid is not defined (it would break time ordering)")

    def to_json(self) -> dict:
        data = self.braid.to_json()
        data["tcross"] = list(self.tcross)
        return data


# -------------------------------------------------------------------- io


def load_trajectories(source) -> TrajectorySet:
    """Read a TrajectorySet from CSV (long format ``t,id,x,y``) or JSON."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return trajectories_from_json(json.loads(text))
    return _parse_csv(text)


def trajectories_from_json(data: dict) -> TrajectorySet:
    return TrajectorySet(
        times=np.asarray(data["times"], dtype=float),
        positions=np.asarray(data["positions"], dtype=float),
    )


def _parse_csv(text: str) -> TrajectorySet:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None or [h.strip().lower() for h in header] != ["t", "id", "x", "y"]:
        raise ValueError("CSV must start with the header 't,id,x,y'")
    rows = []
    for row in reader:
        if not row:
            continue
        t, pid, x, y = float(row[0]), int(row[1]), float(row[2]), float(row[3])
        rows.append((t, pid, x, y))
    if not rows:
        raise ValueError("no data rows")
    rows.sort(key=lambda r: (r[0], r[1]))
    ids = sorted({r[1] for r in rows})
    P = len(ids)
    if ids != list(range(1, P + 1)):
        raise ValueError("particle ids must be 1-based contiguous integers")
    if len(rows) % P != 0:
        raise ValueError("ragged particle data: a sample is missing some particles")
    times = []
    positions = []
    for k in range(0, len(rows), P):
        block = rows[k : k + P]
        t0 = block[0][0]
        if any(r[0] != t0 for r in block) or [r[1] for r in block] != ids:
            raise ValueError("ragged particle data: a sample is missing some particles")
        times.append(t0)
        positions.append([[r[2], r[3]] for r in block])
    return TrajectorySet(times=np.asarray(times), positions=np.asarray(positions))


def save_trajectories_csv(ts: TrajectorySet, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t", "id", "x", "y"])
        for k in range(ts.nsamples):
            for p in range(ts.nparticles):
                w.writerow([ts.times[k], p + 1, ts.positions[k, p, 0], ts.positions[k, p, 1]])


# -------------------------------------------------------- crossing detection


def _project(ts: TrajectorySet, angle: float):
    c, s = math.cos(angle), math.sin(angle)
    proj = ts.positions[:, :, 0] * c + ts.positions[:, :, 1] * s
    orth = -ts.positions[:, :, 0] * s + ts.positions[:, :, 1] * c
    return proj, orth


def _coincidence_check(proj, tol):
    T = proj.shape[0]
    for k in range(T):
        order = np.argsort(proj[k], kind="stable")
        vals = proj[k][order]
        gaps = np.diff(vals)
        bad = np.nonzero(gaps <= tol)[0]
        if bad.size:
            i, j = int(order[bad[0]]) + 1, int(order[bad[0] + 1]) + 1
            raise CoincidentProjectionError(
                f"Paths of particles {j} and {i} have a coincident projection. "
                "Try changing the projection angle."
            )


def _pair_crossings(times, proj, orth, i, j, tol, rot):
    """Crossing events of one particle pair: (t, i, j, sign) tuples."""
    d = proj[:, i] - proj[:, j]
    flips = np.nonzero(d[:-1] * d[1:] < 0)[0]
    events = []
    for k in flips:
        frac = d[k] / (d[k] - d[k + 1])
        tc = times[k] + (times[k + 1] - times[k]) * frac
        oi = orth[k, i] + frac * (orth[k + 1, i] - orth[k, i])
        oj = orth[k, j] + frac * (orth[k + 1, j] - orth[k, j])
        if abs(oi - oj) <= tol:
            raise CoincidentProjectionError(
                f"Paths of particles {i + 1} and {j + 1} have a coincident projection. "
                "Try changing the projection angle."
            )
        left, right = (i, j) if d[k] < 0 else (j, i)
        oleft, oright = (oi, oj) if left == i else (oj, oi)
        sign = rot * (1 if oleft > oright else -1)
        events.append((float(tc), i, j, int(sign)))
    return events


def _extract(ts: TrajectorySet, angle: float):
    if ts.nparticles < 2 or ts.nsamples < 2:
        return [], [], list(range(ts.nparticles))
    tol = properties().braid_abs_tol
    rot = properties().gen_rot_dir
    proj, orth = _project(ts, angle)
    _coincidence_check(proj, tol)
    events = []
    for i in range(ts.nparticles):
        for j in range(i + 1, ts.nparticles):
            events.extend(_pair_crossings(ts.times, proj, orth, i, j, tol, rot))
    events.sort(key=lambda e: e[0])
    order = list(np.argsort(proj[0], kind="stable"))
    posof = {p: k for k, p in enumerate(order)}
    word = []
    tcross = []
    k = 0
    while k < len(events):
        group = [events[k]]
        while k + len(group) < len(events) and events[k + len(group)][0] == group[0][0]:
            group.append(events[k + len(group)])
        if len(group) > 1:
            touched = [p for (_, i, j, _) in group for p in (i, j)]
            if len(set(touched)) != len(touched):
                raise UndersampledDataError(
                    "simultaneous crossings share a strand; the data is undersampled"
                )
            group.sort(key=lambda e: min(posof[e[1]], posof[e[2]]))
        for tc, i, j, sign in group:
            pi, pj = posof[i], posof[j]
            if abs(pi - pj) != 1:
                raise UndersampledDataError(
                    f"particles {i + 1} and {j + 1} swapped while not adjacent in "
                    "projection; the data is undersampled"
                )
            lo = min(pi, pj)
            word.append(sign * (lo + 1))
            tcross.append(tc)
            order[pi], order[pj] = order[pj], order[pi]
            posof[order[pi]], posof[order[pj]] = pi, pj
        k += len(group)
    return word, tcross, order


def braid_from_data(ts: TrajectorySet, angle: float = 0.0) -> Braid:
    """Braid of the trajectory set along the projection line at ``angle``."""
    word, _, _ = _extract(ts, angle)
    return Braid(word=tuple(word), n=ts.nparticles)


def databraid_from_data(ts: TrajectorySet, angle: float = 0.0) -> DataBraid:
    """Like :func:`braid_from_data` but retaining the crossing times."""
    word, tcross, _ = _extract(ts, angle)
    return DataBraid(braid=Braid(word=tuple(word), n=ts.nparticles), tcross=tuple(tcross))


def crossings_from_data(ts: TrajectorySet, angle: float = 0.0):
    """The crossing events as :class:`Crossing` records, time-sorted."""
    word, tcross, _ = _extract(ts, angle)
    return [Crossing(t=t, pos=abs(w), sign=1 if w > 0 else -1) for w, t in zip(word, tcross)]


# ------------------------------------------------------------------ closure


def closure(ts: TrajectorySet, method: str = "default") -> TrajectorySet:
    """Append one sample joining the final points back to the initial ones.

    ``default`` matches final to initial points rank-to-rank in the X
    projection, which creates no new crossings there; ``mindist`` instead
    minimizes the total Euclidean distance with an optimal assignment.
    ``none`` returns the input unchanged.
    """
    if method == "none":
        return ts
    if ts.nparticles < 2:
        raise ValueError("need at least 2 particles to close")
    init = ts.positions[0]
    fin = ts.positions[-1]
    if method == "default":
        init_rank = np.argsort(np.argsort(init[:, 0], kind="stable"), kind="stable")
        fin_rank = np.argsort(np.argsort(fin[:, 0], kind="stable"), kind="stable")
        by_rank = np.argsort(init_rank, kind="stable")  # rank -> initial particle
        target = init[by_rank[fin_rank]]
    elif method == "mindist":
        cost = np.linalg.norm(fin[:, None, :] - init[None, :, :], axis=2)
        rows, cols = linear_sum_assignment(cost)
        target = np.empty_like(init)
        target[rows] = init[cols]
    else:
        raise ValueError(f"unknown closure method {method!r}")
    if ts.nsamples >= 2:
        dt = float(np.mean(np.diff(ts.times)))
    else:
        dt = 1.0
    times = np.concatenate([ts.times, [ts.times[-1] + dt]])
    positions = np.concatenate([ts.positions, target[None, :, :]])
    return TrajectorySet(times=times, positions=positions)


# ------------------------------------------------------------- databraid ops


def db_mul(a: DataBraid, b: DataBraid) -> DataBraid:
    """Concatenate databraids; the first one's crossings must all be earlier."""
    if a.tcross and b.tcross and max(a.tcross) > min(b.tcross):
        raise ValueError(
            "databraid multiplication is only defined if the crossing times of "
            "the first braid are all earlier than the second"
        )
    return DataBraid(braid=mul(a.braid, b.braid), tcross=a.tcross + b.tcross)


def db_equals(a: DataBraid, b: DataBraid) -> bool:
    """Generator-by-generator equality with exactly matching crossing times."""
    return lexeq(a.braid, b.braid) and a.tcross == b.tcross


def db_trunc(db: DataBraid, t0: float, t1: float) -> DataBraid:
    """Keep only the generators with crossing times in ``[t0, t1]``."""
    if t0 > t1:
        raise ValueError("need t0 <= t1")
    keep = [(w, t) for w, t in zip(db.braid.word, db.tcross) if t0 <= t <= t1]
    word = tuple(w for w, _ in keep)
    return DataBraid(braid=Braid(word=word, n=db.braid.n), tcross=tuple(t for _, t in keep))


def db_compact(db: DataBraid) -> DataBraid:
    """Delete canceling generator pairs without reordering the survivors.

    Only deletions are allowed, so crossing times keep their meaning: a pair
    ``w, -w`` is removed when every generator strictly between the two
    commutes with them.
    """
    word = list(db.braid.word)
    times = list(db.tcross)
    changed = True
    while changed:
        changed = False
        for k in range(len(word)):
            wk = word[k]
            for l in range(k + 1, len(word)):
                if word[l] == -wk:
                    del word[l], times[l]
                    del word[k], times[k]
                    changed = True
                    break
                if abs(abs(word[l]) - abs(wk)) <= 1:
                    break
            if changed:
                break
    return DataBraid(braid=Braid(word=tuple(word), n=db.braid.n), tcross=tuple(times))


def db_to_braid(db: DataBraid) -> Braid:
    return db.braid


# ----------------------------------------------------------------------- ftbe


def ftbe(db: DataBraid, T: float | None = None, norm: str = "intaxis") -> float:
    """Finite-time braiding exponent.

    One application of the braid to the canonical basepoint multiloop, log
    of the chosen length measure's growth, divided by the duration ``T``
    (default: time between the first and last crossing).
    """
    measures = {"intaxis": intaxis, "minlength": minlength}
    if norm not in measures:
        raise ValueError("norm must be 'intaxis' or 'minlength'")
    if T is None:
        if len(db.tcross) < 2:
            raise ValueError("need at least 2 crossings to default the duration")
        T = db.tcross[-1] - db.tcross[0]
    if T <= 0:
        raise ValueError("duration must be positive")
    measure = measures[norm]
    base = canonical_loop(db.braid.n, basepoint=True)
    image = act(db.braid, base)
    return (math.log(measure(image)) - math.log(measure(base))) / T


# ------------------------------------------------------- synthetic diagrams


def trajectories_from_braid(b: Braid, height: float = 0.5) -> TrajectorySet:
    """Trajectories that realize a braid word as a diagram.

    Strands sit at unit-spaced positions; each word entry occupies one unit
    of time in which the two strands exchange positions linearly, the one
    passing above given a triangular bump of the given height.  Extracting a
    braid from the result at angle 0 recovers the input braid.
    """
    P = b.n
    rot = properties().gen_rot_dir
    word = b.word
    if not word:
        times = [0.0, 1.0]
        pos = [[[float(p + 1), 0.0] for p in range(P)]] * 2
        return TrajectorySet(times=np.asarray(times), positions=np.asarray(pos))
    offsets = (0.0, 0.4, 0.7)
    # bump heights at the sample offsets of the moving strands
    bump = {0.0: 0.0, 0.4: 0.8 * height, 0.7: 0.6 * height}
    x = [float(p + 1) for p in range(P)]  # position of the strand at slot start
    where = list(range(P))  # particle (strand id) at each position
    times = []
    frames = []
    for slot, w in enumerate(word):
        i = abs(w) - 1
        up_is_left = (w > 0) == (rot > 0)
        for off in offsets:
            times.append(slot + off)
            frame = [[0.0, 0.0] for _ in range(P)]
            for pos_idx in range(P):
                particle = where[pos_idx]
                frame[particle][0] = float(pos_idx + 1)
            left, right = where[i], where[i + 1]
            frame[left][0] = i + 1 + off
            frame[right][0] = i + 2 - off
            h = bump[off]
            frame[left][1] = h if up_is_left else -h
            frame[right][1] = -h if up_is_left else h
            frames.append(frame)
        where[i], where[i + 1] = where[i + 1], where[i]
    times.append(float(len(word)))
    final = [[0.0, 0.0] for _ in range(P)]
    for pos_idx in range(P):
        final[where[pos_idx]][0] = float(pos_idx + 1)
    frames.append(final)
    return TrajectorySet(times=np.asarray(times), positions=np.asarray(frames))


def databraid_from_json(data: dict) -> DataBraid:
    return DataBraid(
        braid=Braid(word=tuple(data["word"]), n=data["n"]),
        tcross=tuple(data["tcross"]),
    )
