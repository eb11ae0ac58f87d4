#!/usr/bin/env python3
"""From 2-D particle trajectories to braids, databraids, and FTBEs."""
import math

import numpy as np

import braidkit as bk
from braidkit import (
    braid_from_data,
    closure,
    databraid_from_data,
    db_compact,
    ftbe,
    trajectories_from_braid,
)

# build sample trajectories that realize a known braid, then read it back
b = bk.make_braid([1, 2, -3])
ts = trajectories_from_braid(b)
print("samples:", ts.nsamples, " particles:", ts.nparticles)
recovered = braid_from_data(ts)
print("recovered:", recovered, " equals original:", bk.equals(recovered, b))

# crossing times turn the braid into a databraid
db = databraid_from_data(ts)
print("tcross:", [round(t, 3) for t in db.tcross])

# wiggly data example: crossings that cancel
t = np.linspace(0.0, 4.0, 41)
x1 = 1.0 + 0.8 * np.sin(1.3 * t) ** 2
x2 = 2.0 - 0.8 * np.sin(1.3 * t) ** 2
y1 = 0.25 * np.sin(2.9 * t + 0.4)
y2 = -y1
wiggle = bk.TrajectorySet(times=t, positions=np.stack([np.stack([x1, y1], 1), np.stack([x2, y2], 1)], axis=1))
raw = databraid_from_data(wiggle)
print("raw word length:", len(raw.braid.word), " after compact:", len(db_compact(raw).braid.word))

# closure appends one segment per particle so the data forms a true braid;
# the default method creates no new crossings in the X projection
closed = closure(ts)
print("closure keeps X braid:", bk.lexeq(braid_from_data(closed), braid_from_data(ts)))
bX = braid_from_data(closed, 0.0)
bA = braid_from_data(closed, 0.35)
print("writhe at two angles:", bk.writhe(bX), bk.writhe(bA))

# a perfectly symmetric configuration breaks the vertical projection
try:
    braid_from_data(trajectories_from_braid(bk.make_braid([1], 2)), angle=math.pi / 2)
except bk.CoincidentProjectionError as err:
    print("expected failure:", str(err)[:60], "...")

# finite-time braiding exponent: growth per unit time over the recording
print(f"FTBE: {ftbe(db):.4f}   (minlength norm: {ftbe(db, norm='minlength'):.4f})")
