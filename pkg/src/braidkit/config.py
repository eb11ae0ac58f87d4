"""Process-global configuration record.

A single mutable :class:`Properties` instance holds the conventions used
throughout the package (crossing-sign orientation, word application order,
plotting direction, numerical tolerance for trajectory coincidence tests).
Values may be overridden at import time through environment variables named
``BRAIDKIT_<KEY>`` where ``<KEY>`` is the upper-cased property key, e.g.
``BRAIDKIT_BRAIDABSTOL=1e-8``.

The record is read-mostly: mutate it only when no braid/loop operation is in
flight (single-writer contract).
"""
from __future__ import annotations

import dataclasses
import os


@dataclasses.dataclass
class Properties:
    gen_rot_dir: int = 1              # +1 or -1; flips crossing signs in data extraction
    gen_loop_act_dir: str = "lr"      # 'lr': first word entry acts on a loop first
    gen_plot_over_under: bool = True  # draw over/under gaps in braid diagrams
    braid_abs_tol: float = 1e-10      # coincidence tolerance for projected trajectories
    braid_plot_dir: str = "bt"        # 'bt', 'tb', 'lr', or 'rl'
    loop_coords_base_point: str = "right"  # only 'right' is supported


# Public property keys as shown by the `prop` command, mapped to attributes.
PROP_KEYS = {
    "GenRotDir": "gen_rot_dir",
    "GenLoopActDir": "gen_loop_act_dir",
    "GenPlotOverUnder": "gen_plot_over_under",
    "BraidAbsTol": "braid_abs_tol",
    "BraidPlotDir": "braid_plot_dir",
    "LoopCoordsBasePoint": "loop_coords_base_point",
}

_properties = Properties()


def properties() -> Properties:
    """Return the global configuration record."""
    return _properties


def _parse(key: str, raw: str):
    attr = PROP_KEYS[key]
    if attr == "gen_rot_dir":
        value = int(raw)
        if value not in (1, -1):
            raise ValueError("GenRotDir must be 1 or -1")
    elif attr == "gen_loop_act_dir":
        value = raw
        if value not in ("lr", "rl"):
            raise ValueError("GenLoopActDir must be 'lr' or 'rl'")
    elif attr == "gen_plot_over_under":
        value = raw.lower() in ("1", "true", "yes", "on")
    elif attr == "braid_abs_tol":
        value = float(raw)
        if value < 0:
            raise ValueError("BraidAbsTol must be nonnegative")
    elif attr == "braid_plot_dir":
        value = raw
        if value not in ("bt", "tb", "lr", "rl"):
            raise ValueError("BraidPlotDir must be one of 'bt','tb','lr','rl'")
    else:  # loop_coords_base_point
        value = raw
        if value != "right":
            raise ValueError("LoopCoordsBasePoint supports only 'right'")
    return attr, value


def get_prop(key: str):
    """Get a property by its public key, e.g. ``get_prop('BraidAbsTol')``."""
    if key not in PROP_KEYS:
        raise KeyError(f"unknown property {key!r}")
    return getattr(_properties, PROP_KEYS[key])


def set_prop(key: str, raw) -> None:
    """Set a property from a raw (string or typed) value, with validation."""
    if key not in PROP_KEYS:
        raise KeyError(f"unknown property {key!r}")
    attr, value = _parse(key, str(raw))
    setattr(_properties, attr, value)


def _apply_env_overrides() -> None:
    for key in PROP_KEYS:
        raw = os.environ.get("BRAIDKIT_" + key.upper())
        if raw is not None:
            set_prop(key, raw)


_apply_env_overrides()
