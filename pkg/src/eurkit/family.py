"""A one-parameter family of three qutrit measurements and its sweep.

The family interpolates the third basis through a parameter a in [0, 1]
(b = 1 - a): M1 is the bare basis, M2 rotates the |0>/|+1> plane by 45
degrees, M3 mixes |0> and |-1> with weights a and b.  For the reference
states |0> and |-1> the total measurement entropy has closed forms
1 + h(a) and h(a), with h the binary entropy in bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import lmf_bound, rpz_bound, scb_bound
from .entropy import binary_entropy, entropy_sum
from .linalg import DensityOperator, ProjectiveMeasurement, ValidationError

GRID_POINTS_DEFAULT = 101


def build_family(a: float) -> list[ProjectiveMeasurement]:
    """The three measurements M1, M2, M3(a) for a in [0, 1]."""
    x = float(a)
    if not (math.isfinite(x) and -1e-12 <= x <= 1.0 + 1e-12):
        raise ValidationError(f"family parameter a = {x!r} outside [0, 1]")
    x = min(max(x, 0.0), 1.0)
    b = 1.0 - x
    e0, e1, e2 = np.eye(3, dtype=complex)
    m1 = ProjectiveMeasurement(np.array([e0, e1, e2]), "M1")
    m2 = ProjectiveMeasurement(
        np.array([(e0 - e2) / np.sqrt(2.0), e1, (e0 + e2) / np.sqrt(2.0)]), "M2"
    )
    m3 = ProjectiveMeasurement(
        np.array(
            [
                np.sqrt(x) * e0 + np.sqrt(b) * e1,
                np.sqrt(b) * e0 - np.sqrt(x) * e1,
                e2,
            ]
        ),
        "M3",
    )
    return [m1, m2, m3]


def reference_states() -> list[tuple[str, DensityOperator]]:
    """The two states swept by default: |0> ('zero') and |-1> ('minus1')."""
    zero = DensityOperator.from_ket([1.0, 0.0, 0.0])
    minus1 = DensityOperator.from_ket([0.0, 1.0, 0.0])
    return [("zero", zero), ("minus1", minus1)]


def entropy_total_closed_form(a: float, state_label: str) -> float:
    """Closed-form total entropy of the family for a reference state."""
    h = binary_entropy(a)
    if state_label == "zero":
        return 1.0 + h
    if state_label == "minus1":
        return h
    raise ValidationError(f"no closed form for state label {state_label!r}")


def default_grid() -> np.ndarray:
    """The standard sweep grid: 101 evenly spaced points on [0, 1]."""
    return np.linspace(0.0, 1.0, GRID_POINTS_DEFAULT)


@dataclass(frozen=True)
class SweepRow:
    """One (a, state) evaluation of the family sweep."""

    a: float
    state_label: str
    entropy_total: float
    scb: float
    lmf: float
    rpz: float


def sweep(grid=None, states=None) -> list[SweepRow]:
    """Evaluate entropy totals and bounds over a grid of family parameters.

    Grid points are visited in the order given; states are sorted by
    label within each point, one row per (a, state) pair.  The rpz bound
    is state-independent and computed once per grid point.
    """
    a_values = default_grid() if grid is None else np.asarray(grid, dtype=float)
    if a_values.ndim != 1 or a_values.size == 0:
        raise ValidationError("sweep grid must be a non-empty 1-d array")
    pairs = reference_states() if states is None else list(states)
    pairs = sorted(pairs, key=lambda kv: kv[0])
    rows = []
    for a in (float(v) for v in a_values):
        ms = build_family(a)
        rpz = rpz_bound(ms)
        for label, rho in pairs:
            rows.append(
                SweepRow(
                    a=a,
                    state_label=label,
                    entropy_total=entropy_sum(ms, rho).total,
                    scb=scb_bound(ms, rho),
                    lmf=lmf_bound(ms, rho),
                    rpz=rpz,
                )
            )
    return rows
